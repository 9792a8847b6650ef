#include "dynnikov/document.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "dynnikov/errors.hpp"

namespace dynnikov {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<BigInt> parse_integers(const std::vector<std::string>& tokens) {
  std::vector<BigInt> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) out.push_back(parse_integer(t));
  return out;
}

int parse_count(std::string_view token) {
  const BigInt v = parse_integer(token);
  if (!v.fits_sint_p()) throw MalformedInput("puncture count out of range: " + std::string(token));
  const int n = static_cast<int>(v.get_si());
  if (n < 3) throw MalformedInput("puncture count must be at least 3, got " + std::string(token));
  return n;
}

int resolve_n(std::optional<int> from_doc, std::optional<int> hint) {
  if (from_doc && hint && *from_doc != *hint) {
    throw MalformedInput("document declares n = " + std::to_string(*from_doc) + " but n = " +
                         std::to_string(*hint) + " was requested");
  }
  if (from_doc) return *from_doc;
  if (hint) {
    if (*hint < 3) throw MalformedInput("puncture count must be at least 3");
    return *hint;
  }
  throw MalformedInput("puncture count n is missing");
}

CurveDocument parse_machine(const std::vector<std::string>& tokens, std::optional<int> hint) {
  const int n = parse_count(tokens.front());
  resolve_n(n, hint);
  std::vector<BigInt> values = parse_integers({tokens.begin() + 1, tokens.end()});
  const std::size_t count = values.size();
  CurveDocument doc;
  doc.n = n;
  const auto un = static_cast<std::size_t>(n);
  if (count == 2 * un - 4) {
    doc.form = CoordForm::reduced;
    doc.first = std::move(values);
  } else if (count == 2 * un) {
    doc.form = CoordForm::extended;
    doc.first.assign(values.begin(), values.begin() + n);
    doc.second.assign(values.begin() + n, values.end());
  } else if (count == 3 * un + 1) {
    doc.form = CoordForm::arcs;
    doc.first.assign(values.begin(), values.begin() + 2 * n);
    doc.second.assign(values.begin() + 2 * n, values.end());
  } else {
    throw MalformedInput("expected " + std::to_string(2 * n - 4) + " reduced or " + std::to_string(2 * n) +
                         " extended values after n = " + std::to_string(n) + ", got " + std::to_string(count));
  }
  return doc;
}

void append_line(std::string& out, std::string_view key, const std::vector<std::string>& values) {
  out += key;
  out += " =";
  for (const std::string& v : values) {
    out += ' ';
    out += v;
  }
  out += '\n';
}

template <class Range>
std::vector<std::string> decimals(const Range& r) {
  std::vector<std::string> out;
  for (const BigInt& x : r) out.push_back(x.get_str(10));
  return out;
}

}  // namespace

BigInt parse_integer(std::string_view token) {
  std::string_view digits = token;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw MalformedInput("not an integer: '" + std::string(token) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw MalformedInput("not an integer: '" + std::string(token) + "'");
    }
  }
  BigInt value(std::string(digits), 10);
  return negative ? BigInt(-value) : value;
}

CurveDocument parse_document(std::string_view text, std::optional<int> n_hint) {
  // Strip comments, then decide between keyed and machine form.
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (!trim(line).empty()) lines.push_back(std::string(trim(line)));
    }
  }
  if (lines.empty()) throw MalformedInput("empty document");

  const bool keyed = lines.front().find_first_of("=:") != std::string::npos;
  if (!keyed) {
    std::vector<std::string> tokens;
    for (const std::string& l : lines) {
      for (std::string& t : split_ws(l)) tokens.push_back(std::move(t));
    }
    return parse_machine(tokens, n_hint);
  }

  std::map<std::string, std::vector<std::string>> fields;
  for (const std::string& l : lines) {
    const auto sep = l.find_first_of("=:");
    if (sep == std::string::npos) throw MalformedInput("expected 'key = values', got '" + l + "'");
    std::string key(trim(std::string_view(l).substr(0, sep)));
    if (key != "n" && key != "reduced" && key != "a" && key != "b" && key != "alpha" && key != "beta" &&
        key != "word") {
      throw MalformedInput("unknown field '" + key + "'");
    }
    if (fields.contains(key)) throw MalformedInput("duplicate field '" + key + "'");
    fields[key] = split_ws(std::string_view(l).substr(sep + 1));
  }

  std::optional<int> declared;
  if (auto it = fields.find("n"); it != fields.end()) {
    if (it->second.size() != 1) throw MalformedInput("field 'n' takes exactly one value");
    declared = parse_count(it->second.front());
  }

  CurveDocument doc;
  doc.n = resolve_n(declared, n_hint);
  const bool has_reduced = fields.contains("reduced");
  const bool has_extended = fields.contains("a") || fields.contains("b");
  const bool has_arcs = fields.contains("alpha") || fields.contains("beta");
  if (int(has_reduced) + int(has_extended) + int(has_arcs) != 1) {
    throw MalformedInput("document must contain exactly one of 'reduced', 'a'/'b', or 'alpha'/'beta'");
  }
  const auto un = static_cast<std::size_t>(doc.n);
  auto take = [&](const std::string& key, std::size_t want) {
    auto it = fields.find(key);
    if (it == fields.end()) throw MalformedInput("missing field '" + key + "'");
    if (it->second.size() != want) {
      throw MalformedInput("field '" + key + "' has " + std::to_string(it->second.size()) + " values, expected " +
                           std::to_string(want) + " for n = " + std::to_string(doc.n));
    }
    return parse_integers(it->second);
  };
  if (has_reduced) {
    doc.form = CoordForm::reduced;
    doc.first = take("reduced", 2 * un - 4);
  } else if (has_extended) {
    doc.form = CoordForm::extended;
    doc.first = take("a", un);
    doc.second = take("b", un);
  } else {
    doc.form = CoordForm::arcs;
    doc.first = take("alpha", 2 * un);
    doc.second = take("beta", un + 1);
  }
  return doc;
}

DynnikovCoords CurveDocument::to_coords() const {
  switch (form) {
    case CoordForm::reduced:
      return extend(ReducedCoords<BigInt>(n, first));
    case CoordForm::extended: {
      DynnikovCoords c(n, first, second);
      require_valid(c);
      return c;
    }
    case CoordForm::arcs: {
      DynnikovCoords c = from_arcs(ArcIntersections<BigInt>(n, first, second));
      require_valid(c);
      return c;
    }
  }
  throw InternalError("unknown coordinate form");
}

BraidWord parse_word(std::string_view text, int n) {
  BraidWord word(n);
  for (const std::string& token : split_ws(text)) {
    const BigInt v = parse_integer(token);
    if (!v.fits_sint_p()) throw InvalidGenerator("braid letter " + token + " is out of range");
    word.push_back(static_cast<int>(v.get_si()));
  }
  return word;
}

std::string format_coords(const DynnikovCoords& c, CoordForm form, OutputFormat format) {
  std::vector<std::string> first, second;
  const char* first_key = "";
  const char* second_key = "";
  switch (form) {
    case CoordForm::reduced:
      first = decimals(reduce(c).values());
      first_key = "reduced";
      break;
    case CoordForm::extended:
      first = decimals(c.a());
      second = decimals(c.b());
      first_key = "a";
      second_key = "b";
      break;
    case CoordForm::arcs: {
      const ArcIntersections<BigInt> arcs = arc_intersections(c);
      first = decimals(arcs.alpha());
      second = decimals(arcs.beta());
      first_key = "alpha";
      second_key = "beta";
      break;
    }
  }
  std::string out;
  if (format == OutputFormat::machine) {
    out += std::to_string(c.n()) + "\n";
    for (const std::string& v : first) out += v + "\n";
    for (const std::string& v : second) out += v + "\n";
    return out;
  }
  append_line(out, "n", {std::to_string(c.n())});
  append_line(out, first_key, first);
  if (form != CoordForm::reduced) append_line(out, second_key, second);
  return out;
}

std::string format_word(const BraidWord& w, OutputFormat format) {
  std::vector<std::string> letters;
  for (int letter : w.letters()) letters.push_back(std::to_string(letter));
  std::string out;
  if (format == OutputFormat::machine) {
    out += std::to_string(w.size()) + "\n";
    for (const std::string& l : letters) out += l + "\n";
    return out;
  }
  append_line(out, "word", letters);
  return out;
}

std::string format_parsed(const ParsedRelaxed& p, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::machine) {
    out += std::to_string(p.size()) + "\n";
    for (const ElementaryCurve& e : p.components) out += std::to_string(e.i) + "\n" + std::to_string(e.j) + "\n";
    return out;
  }
  for (const ElementaryCurve& e : p.components) out += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")\n";
  return out;
}

}  // namespace dynnikov

#include "dynnikov/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dynnikov/bench.hpp"
#include "dynnikov/document.hpp"
#include "dynnikov/errors.hpp"
#include "dynnikov/intersect.hpp"
#include "dynnikov/relax.hpp"

namespace dynnikov {

namespace {

struct CommonOptions {
  int n = 0;
  std::string format = "text";
  bool reduced = false;
  bool extended = false;
  bool arcs = false;

  std::optional<int> n_hint() const { return n > 0 ? std::optional<int>(n) : std::nullopt; }
  OutputFormat output_format() const { return format == "machine" ? OutputFormat::machine : OutputFormat::text; }
  CoordForm target(CoordForm fallback) const {
    if (reduced) return CoordForm::reduced;
    if (arcs) return CoordForm::arcs;
    if (extended) return CoordForm::extended;
    return fallback;
  }
};

void add_common(CLI::App& cmd, CommonOptions& opts, bool with_forms, bool with_arcs) {
  cmd.add_option("--n", opts.n, "Puncture count, when the document does not state it")->check(CLI::Range(3, 1 << 20));
  cmd.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  if (!with_forms) return;
  auto* r = cmd.add_flag("--reduced", opts.reduced, "Emit reduced coordinates");
  auto* e = cmd.add_flag("--extended", opts.extended, "Emit extended coordinates");
  r->excludes(e);
  if (with_arcs) {
    auto* a = cmd.add_flag("--arcs", opts.arcs, "Emit arc intersection numbers");
    a->excludes(r)->excludes(e);
  }
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path);
  if (!file) throw MalformedInput("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

DynnikovCoords load(const std::string& path, const CommonOptions& opts, std::istream& in) {
  return parse_document(read_source(path, in), opts.n_hint()).to_coords();
}

std::vector<GridCell> parse_grid(const std::string& grid_text) {
  std::vector<GridCell> grid;
  std::stringstream ss(grid_text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    const auto colon = cell.find(':');
    if (colon == std::string::npos) throw MalformedInput("grid cell '" + cell + "' is not of the form n:m");
    const BigInt n = parse_integer(cell.substr(0, colon));
    const BigInt m = parse_integer(cell.substr(colon + 1));
    if (!n.fits_sint_p() || n < 3 || m < 0 || !m.fits_ulong_p()) {
      throw MalformedInput("grid cell '" + cell + "' is out of range");
    }
    grid.push_back({static_cast<int>(n.get_si()), static_cast<std::uint64_t>(m.get_ui())});
  }
  return grid;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidCoordinates*>(&e) || dynamic_cast<const NotRelaxed*>(&e) ||
      dynamic_cast<const NotDisjoint*>(&e)) {
    return exit_invalid;
  }
  if (dynamic_cast<const MalformedInput*>(&e) || dynamic_cast<const InvalidGenerator*>(&e) ||
      dynamic_cast<const MismatchError*>(&e) || dynamic_cast<const InvalidElementary*>(&e)) {
    return exit_malformed;
  }
  return exit_failure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric intersection numbers of multicurves on the punctured disk from Dynnikov coordinates",
               "dynnikov"};
  app.require_subcommand(1);

  CommonOptions convert_opts, act_opts, relax_opts, parse_opts, intersect_opts;
  std::string convert_file, act_file, relax_file, parse_file, first_file, second_file;
  std::string word_text;

  auto* convert = app.add_subcommand("convert", "Convert between reduced, extended and arc coordinates");
  convert->add_option("file", convert_file, "Document path, or - for stdin");
  add_common(*convert, convert_opts, true, true);

  auto* act = app.add_subcommand("act", "Apply a positive braid word");
  act->add_option("file", act_file, "Document path, or - for stdin");
  act->add_option("--word", word_text, "Whitespace-separated positive generator indices")->required();
  add_common(*act, act_opts, true, false);

  auto* relax_cmd = app.add_subcommand("relax", "Find a positive braid relaxing the multicurve");
  relax_cmd->add_option("file", relax_file, "Document path, or - for stdin");
  add_common(*relax_cmd, relax_opts, true, false);

  auto* parse_cmd = app.add_subcommand("parse", "List the elementary components of a relaxed multicurve");
  parse_cmd->add_option("file", parse_file, "Document path, or - for stdin");
  add_common(*parse_cmd, parse_opts, false, false);

  auto* intersect = app.add_subcommand("intersect", "Geometric intersection number of two multicurves");
  intersect->add_option("first", first_file, "First document")->required();
  intersect->add_option("second", second_file, "Second document")->required();
  add_common(*intersect, intersect_opts, false, false);

  std::string grid_text = "10:100,10:1000,10:10000";
  int trials = 3;
  std::uint64_t seed = 1;
  bool no_ops = false;
  double min_seconds = 2e-3;
  auto* bench = app.add_subcommand("bench", "Measure runtime scaling on random instances (CSV to stdout)");
  bench->add_option("--grid", grid_text, "Comma-separated n:m cells")->capture_default_str();
  bench->add_option("--trials", trials, "Trials per cell")->check(CLI::NonNegativeNumber)->capture_default_str();
  bench->add_option("--seed", seed, "Random seed")->capture_default_str();
  bench->add_option("--min-seconds", min_seconds, "Minimum measured time per record")->capture_default_str();
  bench->add_flag("--no-ops", no_ops, "Skip arithmetic-operation counting");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "dynnikov: " << e.what() << "\n";
    return exit_malformed;
  }

  try {
    if (*convert) {
      const DynnikovCoords c = load(convert_file, convert_opts, in);
      out << format_coords(c, convert_opts.target(CoordForm::extended), convert_opts.output_format());
    } else if (*act) {
      const DynnikovCoords c = load(act_file, act_opts, in);
      const BraidWord w = parse_word(word_text, c.n());
      out << format_coords(apply_word(c, w), act_opts.target(CoordForm::extended), act_opts.output_format());
    } else if (*relax_cmd) {
      const DynnikovCoords c = load(relax_file, relax_opts, in);
      const RelaxResult<BigInt> r = relax(c);
      out << format_word(r.word, relax_opts.output_format())
          << format_coords(r.relaxed, relax_opts.target(CoordForm::extended), relax_opts.output_format());
    } else if (*parse_cmd) {
      const DynnikovCoords c = load(parse_file, parse_opts, in);
      out << format_parsed(parse_relaxed(c), parse_opts.output_format());
    } else if (*intersect) {
      if ((first_file.empty() || first_file == "-") && (second_file.empty() || second_file == "-")) {
        throw MalformedInput("at most one document can be read from stdin");
      }
      const DynnikovCoords c1 = load(first_file, intersect_opts, in);
      const DynnikovCoords c2 = load(second_file, intersect_opts, in);
      out << intersection_number(c1, c2).get_str(10) << "\n";
    } else if (*bench) {
      BenchOptions options;
      options.count_ops = !no_ops;
      options.min_seconds = min_seconds;
      const ScalingReport report = run_scaling(parse_grid(grid_text), trials, seed, options);
      write_csv(report.records, out);
      for (const ExponentFit& f : report.m_exponents) {
        err << "# runtime exponent vs m at n=" << f.fixed << ": " << std::setprecision(3) << f.exponent << " ("
            << f.points << " points)\n";
      }
      for (const ExponentFit& f : report.n_exponents) {
        err << "# runtime exponent vs n at m~" << f.fixed << ": " << std::setprecision(3) << f.exponent << " ("
            << f.points << " points)\n";
      }
    }
  } catch (const std::exception& e) {
    err << "dynnikov: " << e.what() << (std::string_view(e.what()).ends_with("\n") ? "" : "\n");
    return exit_code_for(e);
  }
  return exit_ok;
}

}  // namespace dynnikov

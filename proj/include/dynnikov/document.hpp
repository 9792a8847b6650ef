#ifndef DYNNIKOV_DOCUMENT_HPP
#define DYNNIKOV_DOCUMENT_HPP

// Text documents describing a multicurve.
//
// Keyed form, one `key = values` line per field, `#` starts a comment:
//
//     n = 4
//     reduced = 0 0 1 1          # a_1..a_{n-2} b_1..b_{n-2}
//
//     n = 4
//     a = 0 0 0 0
//     b = -2 1 1 0
//
//     n = 3
//     alpha = 1 1 1 1 0 0        # alpha_{-1}..alpha_{2n-2}
//     beta = 0 2 0 0             # beta_0..beta_n
//
// A `word = ...` line is accepted and ignored by the coordinate reader.
//
// Machine form is a bare list of decimal integers, one per line: n followed
// by either 2n-4 reduced or 2n extended values.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynnikov/coords.hpp"
#include "dynnikov/relax.hpp"

namespace dynnikov {

enum class CoordForm { reduced, extended, arcs };
enum class OutputFormat { text, machine };

struct CurveDocument {
  int n = 0;
  CoordForm form = CoordForm::reduced;
  /// reduced: values (2n-4).  extended: a, b.  arcs: alpha, beta.
  std::vector<BigInt> first;
  std::vector<BigInt> second;

  /// Extended coordinates; throws InvalidCoordinates when an extended
  /// document fails validation, MalformedInput on inconsistent arcs.
  DynnikovCoords to_coords() const;
};

/// Parses a signed decimal integer; throws MalformedInput.
BigInt parse_integer(std::string_view token);

/// Parses a keyed or machine-form document. `n_hint` supplies n when the
/// document omits it and must agree with it otherwise.
CurveDocument parse_document(std::string_view text, std::optional<int> n_hint = std::nullopt);

/// Whitespace-separated positive letters.
BraidWord parse_word(std::string_view text, int n);

std::string format_coords(const DynnikovCoords& c, CoordForm form, OutputFormat format);
std::string format_word(const BraidWord& w, OutputFormat format);
std::string format_parsed(const ParsedRelaxed& p, OutputFormat format);

}  // namespace dynnikov

#endif  // DYNNIKOV_DOCUMENT_HPP

#ifndef DYNNIKOV_RELAX_HPP
#define DYNNIKOV_RELAX_HPP

// Relaxation of a multicurve by a positive braid, and decomposition of a
// relaxed multicurve into elementary curves.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dynnikov/braid.hpp"
#include "dynnikov/coords.hpp"
#include "dynnikov/errors.hpp"
#include "dynnikov/scalar.hpp"

namespace dynnikov {

/// A relaxed multicurve as a list of elementary components. Pairs are
/// ordered by closing puncture, and within one closing puncture by pop
/// order (innermost first).
struct ParsedRelaxed {
  std::vector<ElementaryCurve> components;

  std::size_t size() const { return components.size(); }
  bool empty() const { return components.empty(); }
  friend bool operator==(const ParsedRelaxed&, const ParsedRelaxed&) = default;
};

/// Bracket matching on b: puncture i opens -b_{i-1} brackets when b_{i-1} < 0
/// and closes b_{i-1} of the most recent ones otherwise.
template <class Scalar>
ParsedRelaxed parse_relaxed(const Coords<Scalar>& c) {
  require_valid(c);
  if (!is_relaxed(c)) throw NotRelaxed("multicurve is not relaxed (some a-coordinate is nonzero)");

  ParsedRelaxed parsed;
  // Open brackets as (puncture, multiplicity) runs, so the stack stays O(n)
  // even for large coordinates.
  std::vector<std::pair<int, Scalar>> stack;
  for (int i = 1; i <= c.n(); ++i) {
    const Scalar& bi = c.b(i - 1);
    if (bi < Scalar(0)) {
      stack.emplace_back(i, Scalar(-bi));
      continue;
    }
    Scalar remaining = bi;
    while (Scalar(0) < remaining) {
      if (stack.empty()) throw InternalError("bracket stack underflow while parsing relaxed multicurve");
      auto& [opener, count] = stack.back();
      const Scalar take = min_of(count, remaining);
      for (Scalar k(0); k < take; k = Scalar(k + Scalar(1))) parsed.components.push_back({opener, i});
      count = Scalar(count - take);
      remaining = Scalar(remaining - take);
      if (count == Scalar(0)) stack.pop_back();
    }
  }
  return parsed;
}

template <class Scalar>
struct RelaxResult {
  BraidWord word;
  Coords<Scalar> relaxed;
};

namespace detail {

/// Generator-application budget 10·(n²·|c| + n), saturated to int64.
template <class Scalar>
std::uint64_t relax_budget(const Coords<Scalar>& c) {
  const BigInt m = scalar_cast<BigInt>(norm(c));
  const long n = c.n();
  const BigInt budget = 10 * (n * n * m + n);
  if (!budget.fits_slong_p()) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(budget.get_si());
}

}  // namespace detail

/// Relaxation: while some a_j > a_{j-1} (scanning j = 1..n-1 from
/// the left), apply σ_j and restart the scan. Returns the accumulated word
/// and the relaxed coordinates.
template <class Scalar>
RelaxResult<Scalar> relax(const Coords<Scalar>& c) {
  require_valid(c);
  const int n = c.n();
  const std::uint64_t budget = detail::relax_budget(c);

  BraidWord word(n);
  auto [a, b] = Coords<Scalar>(c).release();
  std::uint64_t applied = 0;
  int j = 1;
  while (j < n) {
    if (a[j - 1] < a[j]) {
      if (++applied > budget) {
        throw InternalError("relaxation exceeded its budget of " + std::to_string(budget) +
                            " generator applications; the input coordinates are inconsistent");
      }
      detail::apply_generator_in_place<Scalar>(a, b, j);
      word.push_back(j);
      j = 1;
    } else {
      ++j;
    }
  }
  return {std::move(word), Coords<Scalar>(n, std::move(a), std::move(b))};
}

}  // namespace dynnikov

#endif  // DYNNIKOV_RELAX_HPP

#ifndef DYNNIKOV_INTERSECT_HPP
#define DYNNIKOV_INTERSECT_HPP

// Geometric intersection numbers of multicurves.
//
// ι(L, L_{i,j}) for an elementary curve has a closed form in terms of the
// above/below component counts of L. For two arbitrary multicurves, the
// first is relaxed by a positive braid β, which is also applied to the
// second; ι is then a sum of elementary terms since ι(β L1, β L2) = ι(L1, L2).

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "dynnikov/braid.hpp"
#include "dynnikov/coords.hpp"
#include "dynnikov/errors.hpp"
#include "dynnikov/relax.hpp"
#include "dynnikov/scalar.hpp"

namespace dynnikov {

/// A_i and B_i (1 <= i <= n): the numbers of above and below components of a
/// minimal representative inside the band between β_{i-1} and β_i.
template <class Scalar>
class AboveBelowCounts {
 public:
  AboveBelowCounts(std::vector<Scalar> above, std::vector<Scalar> below)
      : above_(std::move(above)), below_(std::move(below)) {
    if (above_.size() != below_.size()) throw MalformedInput("above/below count lengths differ");
  }

  int n() const { return static_cast<int>(above_.size()); }
  /// A_i, 1-based.
  const Scalar& above(int i) const { return above_[static_cast<std::size_t>(i - 1)]; }
  /// B_i, 1-based.
  const Scalar& below(int i) const { return below_[static_cast<std::size_t>(i - 1)]; }

  /// A_{l,m} = min_{l<=k<=m} A_k.
  Scalar above_min(int l, int m) const { return range_min(above_, l, m); }
  /// B_{l,m} = min_{l<=k<=m} B_k.
  Scalar below_min(int l, int m) const { return range_min(below_, l, m); }

  friend bool operator==(const AboveBelowCounts&, const AboveBelowCounts&) = default;

  friend std::ostream& operator<<(std::ostream& os, const AboveBelowCounts& x) {
    os << "A=(";
    for (std::size_t i = 0; i < x.above_.size(); ++i) os << (i ? "," : "") << x.above_[i];
    os << ") B=(";
    for (std::size_t i = 0; i < x.below_.size(); ++i) os << (i ? "," : "") << x.below_[i];
    return os << ")";
  }

 private:
  static Scalar range_min(const std::vector<Scalar>& v, int l, int m) {
    Scalar best = v[static_cast<std::size_t>(l - 1)];
    for (int k = l + 1; k <= m; ++k) best = min_of(best, v[static_cast<std::size_t>(k - 1)]);
    return best;
  }

  std::vector<Scalar> above_;
  std::vector<Scalar> below_;
};

namespace detail {

template <class Scalar>
AboveBelowCounts<Scalar> above_below_from_arcs(const Coords<Scalar>& c, const ArcIntersections<Scalar>& arcs) {
  const int n = c.n();
  std::vector<Scalar> above, below;
  above.reserve(static_cast<std::size_t>(n));
  below.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Scalar loops = abs_of(c.b(i - 1));
    above.push_back(Scalar(arcs.alpha(2 * i - 3) - loops));
    below.push_back(Scalar(arcs.alpha(2 * i - 2) - loops));
  }
  return AboveBelowCounts<Scalar>(std::move(above), std::move(below));
}

/// ι(L, L_{i,j}) = β_{i-1} + β_j - 2(R + L + A_{i,j} + B_{i,j}), where R and L
/// count the large right and large left loop components.
template <class Scalar>
Scalar intersect_elementary(const Coords<Scalar>& c, const ArcIntersections<Scalar>& arcs,
                            const AboveBelowCounts<Scalar>& counts, const ElementaryCurve& e) {
  const int i = e.i;
  const int j = e.j;
  const Scalar above = counts.above_min(i, j);
  const Scalar below = counts.below_min(i, j);
  const Scalar large_right =
      min_of(min_of(Scalar(counts.above_min(i, j - 1) - above), Scalar(counts.below_min(i, j - 1) - below)),
             positive_part(c.b(j - 1)));
  const Scalar large_left =
      min_of(min_of(Scalar(counts.above_min(i + 1, j) - above), Scalar(counts.below_min(i + 1, j) - below)),
             positive_part(Scalar(-c.b(i - 1))));
  const Scalar disjoint = Scalar(Scalar(large_right + large_left) + Scalar(above + below));
  return Scalar(Scalar(arcs.beta(i - 1) + arcs.beta(j)) - Scalar(disjoint + disjoint));
}

}  // namespace detail

template <class Scalar>
AboveBelowCounts<Scalar> above_below(const Coords<Scalar>& c) {
  require_valid(c);
  return detail::above_below_from_arcs(c, arc_intersections(c));
}

/// ι(L, L_{i,j}).
template <class Scalar>
Scalar intersect_elementary(const Coords<Scalar>& c, const ElementaryCurve& e) {
  require_elementary(e, c.n());
  require_valid(c);
  const ArcIntersections<Scalar> arcs = arc_intersections(c);
  return detail::intersect_elementary(c, arcs, detail::above_below_from_arcs(c, arcs), e);
}

/// Geometric intersection number ι(L1, L2). Relaxes `first`; intermediate
/// values of `second` can grow far beyond the magnitude of the inputs.
template <class Scalar>
Scalar intersection_number(const Coords<Scalar>& first, const Coords<Scalar>& second) {
  if (first.n() != second.n()) {
    throw MismatchError("puncture counts differ: " + std::to_string(first.n()) + " and " +
                        std::to_string(second.n()));
  }
  require_valid(second);
  const RelaxResult<Scalar> relaxed = relax(first);
  const ParsedRelaxed parsed = parse_relaxed(relaxed.relaxed);
  const Coords<Scalar> moved = apply_word(second, relaxed.word);
  const ArcIntersections<Scalar> arcs = arc_intersections(moved);
  const AboveBelowCounts<Scalar> counts = detail::above_below_from_arcs(moved, arcs);

  Scalar total(0);
  for (const ElementaryCurve& e : parsed.components) {
    total = Scalar(total + detail::intersect_elementary(moved, arcs, counts, e));
  }
  return total;
}

/// ρ(L1 ⊔ L2) = ρ(L1) + ρ(L2); throws NotDisjoint if ι(L1, L2) != 0.
template <class Scalar>
Coords<Scalar> disjoint_union(const Coords<Scalar>& x, const Coords<Scalar>& y) {
  const Scalar crossings = intersection_number(x, y);
  if (!(crossings == Scalar(0))) {
    throw NotDisjoint("multicurves intersect " + to_decimal(crossings) + " times; their union is not a multicurve");
  }
  return coordinate_sum(x, y);
}

}  // namespace dynnikov

#endif  // DYNNIKOV_INTERSECT_HPP

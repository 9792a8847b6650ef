#ifndef DYNNIKOV_COORDS_HPP
#define DYNNIKOV_COORDS_HPP

// Extended and reduced Dynnikov coordinates of multicurves on the
// n-punctured disk, and their intersection numbers with the Dynnikov arcs.
//
// Extended coordinates (a; b) live in Z^{2n} with a and b indexed 0..n-1.
// They carry four redundant entries (a_0 = a_{n-1} = 0, b_0 and b_{n-1} are
// determined by the rest); the reduced vector (a_1..a_{n-2}; b_1..b_{n-2})
// is a bijective encoding of multicurves by Z^{2n-4}.

#include <cstddef>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dynnikov/errors.hpp"
#include "dynnikov/scalar.hpp"

namespace dynnikov {

namespace detail {

inline void require_puncture_count(int n) {
  if (n < 3) throw MalformedInput("puncture count must be at least 3, got " + std::to_string(n));
}

inline void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw MalformedInput(std::string(what) + " has length " + std::to_string(got) + ", expected " +
                         std::to_string(want));
  }
}

/// ⌈i/2⌉ with ceiling semantics for negative i.
constexpr int ceil_half(int i) { return i % 2 == 0 ? i / 2 : (i + 1) / 2; }

}  // namespace detail

/// Extended Dynnikov coordinates (a; b) ∈ Z^{2n}.
///
/// Construction checks only the shape; use `validate` to check that the
/// vector is the image of a multicurve.
template <class Scalar>
class Coords {
 public:
  using scalar_type = Scalar;

  Coords(int n, std::vector<Scalar> a, std::vector<Scalar> b) : n_(n), a_(std::move(a)), b_(std::move(b)) {
    detail::require_puncture_count(n_);
    detail::require_length(a_.size(), static_cast<std::size_t>(n_), "a");
    detail::require_length(b_.size(), static_cast<std::size_t>(n_), "b");
  }

  /// The empty multicurve on n punctures.
  static Coords zero(int n) {
    detail::require_puncture_count(n);
    return Coords(n, std::vector<Scalar>(n, Scalar(0)), std::vector<Scalar>(n, Scalar(0)));
  }

  int n() const { return n_; }
  const Scalar& a(int i) const { return a_[static_cast<std::size_t>(i)]; }
  const Scalar& b(int i) const { return b_[static_cast<std::size_t>(i)]; }
  std::span<const Scalar> a() const { return a_; }
  std::span<const Scalar> b() const { return b_; }

  template <class To>
  Coords<To> cast() const {
    std::vector<To> a, b;
    a.reserve(a_.size());
    b.reserve(b_.size());
    for (const Scalar& x : a_) a.push_back(scalar_cast<To>(x));
    for (const Scalar& x : b_) b.push_back(scalar_cast<To>(x));
    return Coords<To>(n_, std::move(a), std::move(b));
  }

  /// Moves the storage out; used by the in-place algorithms.
  std::pair<std::vector<Scalar>, std::vector<Scalar>> release() && { return {std::move(a_), std::move(b_)}; }

  friend bool operator==(const Coords& x, const Coords& y) {
    return x.n_ == y.n_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Coords& c) {
    os << "n=" << c.n_ << " a=(";
    for (int i = 0; i < c.n_; ++i) os << (i ? "," : "") << c.a(i);
    os << ") b=(";
    for (int i = 0; i < c.n_; ++i) os << (i ? "," : "") << c.b(i);
    return os << ")";
  }

 private:
  int n_;
  std::vector<Scalar> a_;
  std::vector<Scalar> b_;
};

using DynnikovCoords = Coords<BigInt>;

/// Reduced coordinates (a_1..a_{n-2}, b_1..b_{n-2}) ∈ Z^{2n-4}. Any vector
/// of the right length is valid.
template <class Scalar>
class ReducedCoords {
 public:
  ReducedCoords(int n, std::vector<Scalar> values) : n_(n), values_(std::move(values)) {
    detail::require_puncture_count(n_);
    detail::require_length(values_.size(), static_cast<std::size_t>(2 * n_ - 4), "reduced coordinates");
  }

  int n() const { return n_; }
  std::span<const Scalar> values() const { return values_; }
  /// a_i for 1 <= i <= n-2.
  const Scalar& a(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  /// b_i for 1 <= i <= n-2.
  const Scalar& b(int i) const { return values_[static_cast<std::size_t>(n_ - 2 + i - 1)]; }

  friend bool operator==(const ReducedCoords&, const ReducedCoords&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ReducedCoords& r) {
    os << "n=" << r.n_ << " (";
    for (std::size_t i = 0; i < r.values_.size(); ++i) os << (i ? "," : "") << r.values_[i];
    return os << ")";
  }

 private:
  int n_;
  std::vector<Scalar> values_;
};

/// Intersection numbers (α_{-1}..α_{2n-2}; β_0..β_n) with the Dynnikov arcs.
template <class Scalar>
class ArcIntersections {
 public:
  ArcIntersections(int n, std::vector<Scalar> alpha, std::vector<Scalar> beta)
      : n_(n), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    detail::require_puncture_count(n_);
    detail::require_length(alpha_.size(), static_cast<std::size_t>(2 * n_), "alpha");
    detail::require_length(beta_.size(), static_cast<std::size_t>(n_ + 1), "beta");
  }

  int n() const { return n_; }
  /// α_i for -1 <= i <= 2n-2.
  const Scalar& alpha(int i) const { return alpha_[static_cast<std::size_t>(i + 1)]; }
  /// β_i for 0 <= i <= n.
  const Scalar& beta(int i) const { return beta_[static_cast<std::size_t>(i)]; }
  std::span<const Scalar> alpha() const { return alpha_; }
  std::span<const Scalar> beta() const { return beta_; }

  friend bool operator==(const ArcIntersections&, const ArcIntersections&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ArcIntersections& x) {
    os << "alpha=(";
    for (std::size_t i = 0; i < x.alpha_.size(); ++i) os << (i ? "," : "") << x.alpha_[i];
    os << ") beta=(";
    for (std::size_t i = 0; i < x.beta_.size(); ++i) os << (i ? "," : "") << x.beta_[i];
    return os << ")";
  }

 private:
  int n_;
  std::vector<Scalar> alpha_;
  std::vector<Scalar> beta_;
};

/// The round curve L_{i,j} about punctures i..j, 1 <= i < j <= n, (i,j) != (1,n).
struct ElementaryCurve {
  int i = 0;
  int j = 0;

  friend bool operator==(const ElementaryCurve&, const ElementaryCurve&) = default;
  friend auto operator<=>(const ElementaryCurve&, const ElementaryCurve&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ElementaryCurve& e) {
    return os << "(" << e.i << "," << e.j << ")";
  }
};

inline bool is_valid_elementary(const ElementaryCurve& e, int n) {
  return 1 <= e.i && e.i < e.j && e.j <= n && !(e.i == 1 && e.j == n);
}

inline void require_elementary(const ElementaryCurve& e, int n) {
  if (!is_valid_elementary(e, n)) {
    std::ostringstream msg;
    msg << "pair " << e << " is not an elementary multicurve on " << n << " punctures";
    throw InvalidElementary(msg.str());
  }
}

/// Collected invariant violations; empty means valid.
struct ValidityReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }

  std::string summary() const {
    std::string s;
    for (const std::string& v : violations) s += v + "\n";
    return s;
  }
};

/// The value b_0 forced by the other coordinates:
///   b_0 = -max_{1<=k<=n-2} (|a_k| + b_k⁺ + Σ_{j=1}^{k-1} b_j).
/// Reads only a_1..a_{n-2} and b_1..b_{n-2}.
template <class Scalar, class AAt, class BAt>
Scalar forced_b0(int n, AAt&& a_at, BAt&& b_at) {
  Scalar best(0);
  Scalar partial(0);
  for (int k = 1; k <= n - 2; ++k) {
    const Scalar term = Scalar(Scalar(abs_of<Scalar>(a_at(k)) + positive_part<Scalar>(b_at(k))) + partial);
    best = k == 1 ? term : max_of(best, term);
    partial = Scalar(partial + b_at(k));
  }
  return Scalar(-best);
}

/// Reports every violated relation of extended coordinates: a_0 = a_{n-1} = 0,
/// Σ b = 0, the forced value of b_0, and nonnegative β_i (prefix sums of b ≤ 0).
template <class Scalar>
ValidityReport validate(const Coords<Scalar>& c) {
  ValidityReport report;
  const int n = c.n();
  if (!(c.a(0) == Scalar(0))) report.violations.push_back("a[0] = " + to_decimal(c.a(0)) + ", must be 0");
  if (!(c.a(n - 1) == Scalar(0))) {
    report.violations.push_back("a[" + std::to_string(n - 1) + "] = " + to_decimal(c.a(n - 1)) + ", must be 0");
  }
  Scalar total(0);
  for (int i = 0; i < n; ++i) total = Scalar(total + c.b(i));
  if (!(total == Scalar(0))) report.violations.push_back("sum of b is " + to_decimal(total) + ", must be 0");

  const Scalar b0 = forced_b0<Scalar>(n, [&](int k) -> const Scalar& { return c.a(k); },
                                      [&](int k) -> const Scalar& { return c.b(k); });
  if (!(b0 == c.b(0))) {
    report.violations.push_back("b[0] = " + to_decimal(c.b(0)) + ", but the other coordinates force b[0] = " +
                                to_decimal(b0));
  }
  Scalar prefix(0);
  for (int i = 1; i <= n; ++i) {
    prefix = Scalar(prefix + c.b(i - 1));
    if (Scalar(0) < prefix) {
      report.violations.push_back("prefix sum b[0]+...+b[" + std::to_string(i - 1) + "] = " + to_decimal(prefix) +
                                  " is positive (negative beta[" + std::to_string(i) + "])");
    }
  }
  return report;
}

template <class Scalar>
void require_valid(const Coords<Scalar>& c) {
  ValidityReport report = validate(c);
  if (!report.ok()) throw InvalidCoordinates("invalid Dynnikov coordinates:\n" + report.summary());
}

template <class Scalar>
Coords<Scalar> extend(const ReducedCoords<Scalar>& r) {
  const int n = r.n();
  std::vector<Scalar> a(n, Scalar(0));
  std::vector<Scalar> b(n, Scalar(0));
  for (int i = 1; i <= n - 2; ++i) {
    a[i] = r.a(i);
    b[i] = r.b(i);
  }
  b[0] = forced_b0<Scalar>(n, [&](int k) -> const Scalar& { return r.a(k); },
                           [&](int k) -> const Scalar& { return r.b(k); });
  Scalar total(0);
  for (int i = 0; i <= n - 2; ++i) total = Scalar(total + b[i]);
  b[n - 1] = Scalar(-total);
  return Coords<Scalar>(n, std::move(a), std::move(b));
}

/// Convenience: extend a raw vector of 2n-4 values.
template <class Scalar>
Coords<Scalar> extend(int n, std::vector<Scalar> values) {
  return extend(ReducedCoords<Scalar>(n, std::move(values)));
}

template <class Scalar>
ReducedCoords<Scalar> reduce(const Coords<Scalar>& c) {
  require_valid(c);
  const int n = c.n();
  std::vector<Scalar> values;
  values.reserve(static_cast<std::size_t>(2 * n - 4));
  for (int i = 1; i <= n - 2; ++i) values.push_back(c.a(i));
  for (int i = 1; i <= n - 2; ++i) values.push_back(c.b(i));
  return ReducedCoords<Scalar>(n, std::move(values));
}

template <class Scalar>
ArcIntersections<Scalar> arc_intersections(const Coords<Scalar>& c) {
  const int n = c.n();
  std::vector<Scalar> beta(n + 1, Scalar(0));
  Scalar prefix(0);
  for (int i = 1; i <= n; ++i) {
    prefix = Scalar(prefix + c.b(i - 1));
    beta[i] = Scalar(Scalar(-prefix) - prefix);
  }
  std::vector<Scalar> alpha;
  alpha.reserve(static_cast<std::size_t>(2 * n));
  for (int i = -1; i <= 2 * n - 2; ++i) {
    const int k = detail::ceil_half(i);
    const Scalar signed_a = (i % 2 == 0) ? c.a(k) : Scalar(-c.a(k));
    const Scalar& crossing = Scalar(0) <= c.b(k) ? beta[k] : beta[k + 1];
    alpha.push_back(Scalar(signed_a + half(crossing)));
  }
  return ArcIntersections<Scalar>(n, std::move(alpha), std::move(beta));
}

/// Reports violations of: nonnegativity, β_0 = β_n = 0, even β,
/// α_{2i} + α_{2i-1} = max(β_i, β_{i+1}), and α_{2i} ≡ α_{2i-1} (mod 2).
template <class Scalar>
ValidityReport validate(const ArcIntersections<Scalar>& x) {
  ValidityReport report;
  const int n = x.n();
  for (int i = -1; i <= 2 * n - 2; ++i) {
    if (x.alpha(i) < Scalar(0)) report.violations.push_back("alpha[" + std::to_string(i) + "] is negative");
  }
  for (int i = 0; i <= n; ++i) {
    if (x.beta(i) < Scalar(0)) report.violations.push_back("beta[" + std::to_string(i) + "] is negative");
    if (!is_even(x.beta(i))) report.violations.push_back("beta[" + std::to_string(i) + "] is odd");
  }
  if (!(x.beta(0) == Scalar(0))) report.violations.push_back("beta[0] must be 0");
  if (!(x.beta(n) == Scalar(0))) report.violations.push_back("beta[" + std::to_string(n) + "] must be 0");
  for (int i = 0; i <= n - 1; ++i) {
    const Scalar sum = Scalar(x.alpha(2 * i) + x.alpha(2 * i - 1));
    if (!(sum == max_of(x.beta(i), x.beta(i + 1)))) {
      report.violations.push_back("alpha[" + std::to_string(2 * i) + "] + alpha[" + std::to_string(2 * i - 1) +
                                  "] differs from max(beta[" + std::to_string(i) + "], beta[" +
                                  std::to_string(i + 1) + "])");
    }
    if (!is_even(Scalar(x.alpha(2 * i) - x.alpha(2 * i - 1)))) {
      report.violations.push_back("alpha[" + std::to_string(2 * i) + "] and alpha[" + std::to_string(2 * i - 1) +
                                  "] have different parity");
    }
  }
  return report;
}

/// Inverts `arc_intersections`; throws MalformedInput when the arc
/// invariants fail.
template <class Scalar>
Coords<Scalar> from_arcs(const ArcIntersections<Scalar>& x) {
  ValidityReport report = validate(x);
  if (!report.ok()) throw MalformedInput("inconsistent arc intersection numbers:\n" + report.summary());
  const int n = x.n();
  std::vector<Scalar> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = half(Scalar(x.alpha(2 * i) - x.alpha(2 * i - 1)));
    b[i] = half(Scalar(x.beta(i) - x.beta(i + 1)));
  }
  return Coords<Scalar>(n, std::move(a), std::move(b));
}

/// Coordinates of L_{i,j}: zero except b_{i-1} = -1 and b_{j-1} = 1.
template <class Scalar = BigInt>
Coords<Scalar> elementary_coords(const ElementaryCurve& e, int n) {
  detail::require_puncture_count(n);
  require_elementary(e, n);
  std::vector<Scalar> a(n, Scalar(0)), b(n, Scalar(0));
  b[e.i - 1] = Scalar(-1);
  b[e.j - 1] = Scalar(1);
  return Coords<Scalar>(n, std::move(a), std::move(b));
}

/// |L| = Σ (|a_i| + |b_i|).
template <class Scalar>
Scalar norm(const Coords<Scalar>& c) {
  Scalar total(0);
  for (int i = 0; i < c.n(); ++i) total = Scalar(Scalar(total + abs_of(c.a(i))) + abs_of(c.b(i)));
  return total;
}

template <class Scalar>
bool is_relaxed(const Coords<Scalar>& c) {
  for (const Scalar& x : c.a()) {
    if (!(x == Scalar(0))) return false;
  }
  return true;
}

/// Coordinatewise sum. Only meaningful for disjoint multicurves; see
/// `disjoint_union` for the checked version.
template <class Scalar>
Coords<Scalar> coordinate_sum(const Coords<Scalar>& x, const Coords<Scalar>& y) {
  if (x.n() != y.n()) {
    throw MismatchError("puncture counts differ: " + std::to_string(x.n()) + " and " + std::to_string(y.n()));
  }
  std::vector<Scalar> a(x.n()), b(x.n());
  for (int i = 0; i < x.n(); ++i) {
    a[i] = Scalar(x.a(i) + y.a(i));
    b[i] = Scalar(x.b(i) + y.b(i));
  }
  return Coords<Scalar>(x.n(), std::move(a), std::move(b));
}

}  // namespace dynnikov

#endif  // DYNNIKOV_COORDS_HPP

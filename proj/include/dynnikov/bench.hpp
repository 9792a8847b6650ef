#ifndef DYNNIKOV_BENCH_HPP
#define DYNNIKOV_BENCH_HPP

// Random instances and scaling measurements for the intersection algorithm.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "dynnikov/braid.hpp"
#include "dynnikov/coords.hpp"

namespace dynnikov {

/// One timing/size measurement of ι(L1, L2).
struct BenchRecord {
  int n = 0;
  std::uint64_t target_m = 0;  // grid cell the record belongs to; not emitted
  std::uint64_t m = 0;         // |L1| + |L2|
  std::uint64_t word_len = 0;  // length of the braid relaxing L1
  std::optional<std::uint64_t> ops;
  double wall_time = 0.0;      // seconds per call of intersection_number
};

struct GridCell {
  int n = 0;
  std::uint64_t target_m = 0;
};

struct BenchOptions {
  bool count_ops = true;
  /// Each measurement repeats the call until at least this much time passed.
  double min_seconds = 2e-3;
};

struct ExponentFit {
  /// The fixed parameter of the group: target m for n-fits, n for m-fits.
  std::uint64_t fixed = 0;
  double exponent = 0.0;
  std::size_t points = 0;
};

struct ScalingReport {
  std::vector<BenchRecord> records;
  std::vector<ExponentFit> m_exponents;  // runtime vs m, one per fixed n
  std::vector<ExponentFit> n_exponents;  // runtime vs n, one per fixed target m
};

/// Random word of `length` letters drawn uniformly from 1..n-1.
BraidWord random_word(int n, std::size_t length, std::mt19937_64& rng);

/// Random relaxed multicurve with at most `max_components` elementary
/// components, nested or disjoint, drawn by a random bracket process over
/// the punctures. `nonempty` forces at least one component.
DynnikovCoords random_relaxed(int n, int max_components, bool nonempty, std::mt19937_64& rng);

/// A random relaxed multicurve pushed around by random positive letters until
/// its norm reaches `target_norm` (or `max_letters` letters were applied).
/// Deterministic in `seed`.
DynnikovCoords random_multicurve(int n, std::uint64_t target_norm, std::uint64_t seed,
                                 std::size_t max_letters = 200000);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

ScalingReport run_scaling(const std::vector<GridCell>& grid, int trials, std::uint64_t seed,
                          const BenchOptions& options = {});

/// CSV with header n,m,word_len,ops,wall_time.
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace dynnikov

#endif  // DYNNIKOV_BENCH_HPP

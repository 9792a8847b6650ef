#include "dynnikov/bench.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>

#include "dynnikov/errors.hpp"
#include "dynnikov/intersect.hpp"
#include "dynnikov/relax.hpp"

namespace dynnikov {

namespace {

std::uint64_t to_u64(const BigInt& x) {
  if (!x.fits_ulong_p()) throw std::overflow_error("value exceeds 64-bit range: " + x.get_str());
  return x.get_ui();
}

// splitmix64, for deriving independent per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

BigInt local_norm(const std::vector<BigInt>& a, const std::vector<BigInt>& b, int i) {
  BigInt s = abs(a[i - 1]) + abs(a[i]) + abs(b[i - 1]) + abs(b[i]);
  return s;
}

}  // namespace

BraidWord random_word(int n, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(1, n - 1);
  BraidWord w(n);
  for (std::size_t k = 0; k < length; ++k) w.push_back(letter(rng));
  return w;
}

DynnikovCoords random_relaxed(int n, int max_components, bool nonempty, std::mt19937_64& rng) {
  std::vector<ElementaryCurve> closed;
  std::vector<int> open;
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i <= n; ++i) {
    const int budget = max_components - static_cast<int>(closed.size() + open.size());
    if (!open.empty() && coin(rng)) {
      std::uniform_int_distribution<std::size_t> count(1, open.size());
      for (std::size_t k = count(rng); k > 0; --k) {
        const int opener = open.back();
        open.pop_back();
        if (!(opener == 1 && i == n)) closed.push_back({opener, i});
      }
    } else if (i < n && budget > 0) {
      std::uniform_int_distribution<int> count(0, std::min(budget, 2));
      for (int k = count(rng); k > 0; --k) open.push_back(i);
    }
  }
  if (closed.empty() && nonempty) {
    std::uniform_int_distribution<int> start(1, n - 1);
    const int i = start(rng);
    std::uniform_int_distribution<int> stop(i + 1, i == 1 ? n - 1 : n);
    closed.push_back({i, stop(rng)});
  }
  DynnikovCoords c = DynnikovCoords::zero(n);
  for (const ElementaryCurve& e : closed) c = coordinate_sum(c, elementary_coords(e, n));
  return c;
}

DynnikovCoords random_multicurve(int n, std::uint64_t target_norm, std::uint64_t seed, std::size_t max_letters) {
  if (target_norm == 0) return DynnikovCoords::zero(n);
  std::mt19937_64 rng(mix_seed(seed));
  auto [a, b] = random_relaxed(n, n, true, rng).release();
  std::uniform_int_distribution<int> letter(1, n - 1);

  BigInt total = norm(DynnikovCoords(n, a, b));
  const BigInt target(static_cast<unsigned long>(target_norm));
  for (std::size_t k = 0; k < max_letters && total < target; ++k) {
    const int i = letter(rng);
    total -= local_norm(a, b, i);
    detail::apply_generator_in_place<BigInt>(a, b, i);
    total += local_norm(a, b, i);
  }
  return DynnikovCoords(n, std::move(a), std::move(b));
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("slope fit needs at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = k * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("slope fit needs distinct x values");
  return (k * sxy - sx * sy) / denom;
}

ScalingReport run_scaling(const std::vector<GridCell>& grid, int trials, std::uint64_t seed,
                          const BenchOptions& options) {
  using clock = std::chrono::steady_clock;
  ScalingReport report;
  std::uint64_t stream = seed;
  for (const GridCell& cell : grid) {
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t half_m = cell.target_m / 2;
      const DynnikovCoords first = random_multicurve(cell.n, half_m, mix_seed(++stream));
      const DynnikovCoords second = random_multicurve(cell.n, cell.target_m - half_m, mix_seed(++stream));

      BenchRecord rec;
      rec.n = cell.n;
      rec.target_m = cell.target_m;
      rec.m = to_u64(BigInt(norm(first) + norm(second)));
      rec.word_len = relax(first).word.size();

      BigInt forward;
      std::size_t reps = 0;
      const auto start = clock::now();
      double elapsed = 0.0;
      do {
        forward = intersection_number(first, second);
        ++reps;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
      } while (elapsed < options.min_seconds);
      rec.wall_time = elapsed / static_cast<double>(reps);

      const BigInt backward = intersection_number(second, first);
      if (forward != backward || forward < 0 || !is_even(forward)) {
        throw InternalError("benchmark pair violates symmetry/evenness: " + forward.get_str() + " vs " +
                            backward.get_str());
      }

      if (options.count_ops) {
        const auto counted_first = first.cast<Counted<BigInt>>();
        const auto counted_second = second.cast<Counted<BigInt>>();
        OpCounter::reset();
        (void)intersection_number(counted_first, counted_second);
        rec.ops = OpCounter::get();
      }
      report.records.push_back(rec);
    }
  }

  std::map<int, std::vector<const BenchRecord*>> by_n;
  std::map<std::uint64_t, std::vector<const BenchRecord*>> by_m;
  for (const BenchRecord& r : report.records) {
    by_n[r.n].push_back(&r);
    by_m[r.target_m].push_back(&r);
  }
  for (const auto& [n, group] : by_n) {
    std::set<std::uint64_t> targets;
    std::vector<double> x, y;
    for (const BenchRecord* r : group) {
      targets.insert(r->target_m);
      x.push_back(static_cast<double>(std::max<std::uint64_t>(r->m, 1)));
      y.push_back(r->wall_time);
    }
    if (targets.size() >= 2) report.m_exponents.push_back({static_cast<std::uint64_t>(n), loglog_slope(x, y), x.size()});
  }
  for (const auto& [m, group] : by_m) {
    std::set<int> ns;
    std::vector<double> x, y;
    for (const BenchRecord* r : group) {
      ns.insert(r->n);
      x.push_back(static_cast<double>(r->n));
      y.push_back(r->wall_time);
    }
    if (ns.size() >= 2) report.n_exponents.push_back({m, loglog_slope(x, y), x.size()});
  }
  return report;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
  out << "n,m,word_len,ops,wall_time\n";
  for (const BenchRecord& r : records) {
    out << r.n << ',' << r.m << ',' << r.word_len << ',';
    if (r.ops) out << *r.ops;
    out << ',' << r.wall_time << '\n';
  }
}

}  // namespace dynnikov

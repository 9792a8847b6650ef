#include "worked_examples.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "dynnikov/bench.hpp"
#include "dynnikov/cli.hpp"
#include "dynnikov/document.hpp"
#include "dynnikov/dynnikov.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

namespace worked {

namespace {

using namespace dynnikov;
using testing_support::big;
using testing_support::coords;
using testing_support::elem;
using testing_support::show;
using testing_support::to_oracle;

class Checker {
 public:
  template <class Got, class Want>
  void eq(const Got& got, const Want& want, const std::string& what) {
    if (!(got == want)) msg_ += what + ": got " + show(got) + ", want " + show(want) + "; ";
  }
  void truth(bool ok, const std::string& what) {
    if (!ok) msg_ += what + " failed; ";
  }
  template <class E, class F>
  void throws(F&& f, const std::string& what) {
    try {
      f();
      msg_ += what + ": no exception; ";
    } catch (const E&) {
    } catch (const std::exception& e) {
      msg_ += what + ": wrong exception '" + e.what() + "'; ";
    }
  }
  std::string result() const { return msg_; }

 private:
  std::string msg_;
};

std::string vec_str(const oracle::Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_document(const std::string& name, const std::string& body) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / ("dynnikov_example_" + name + ".txt");
  std::ofstream(p) << body;
  return p.string();
}

// Frozen values used by several examples.
DynnikovCoords l12() { return elem(1, 2, 3); }
DynnikovCoords l23() { return elem(2, 3, 3); }
DynnikovCoords sigma2_l12() { return coords({0, 1, 0}, {-1, 0, 1}); }
DynnikovCoords sigma1_l23() { return coords({0, -1, 0}, {-1, 0, 1}); }
DynnikovCoords empty3() { return DynnikovCoords::zero(3); }

std::vector<Example> build() {
  std::vector<Example> ex;
  auto add = [&](std::string module, std::string name, std::function<std::string()> f) {
    ex.push_back({std::move(module), std::move(name), std::move(f)});
  };

  // ---- coords: extend
  add("coords", "extend n=3 (0,1) is L_{1,2}", [] {
    Checker c;
    c.truth(oracle::extend(3, {0, 1}) == oracle::elementary(3, 1, 2), "oracle");
    c.eq(extend(3, big({0, 1})), coords({0, 0, 0}, {-1, 1, 0}), "extend");
    return c.result();
  });
  add("coords", "extend n=3 (0,0) is empty", [] {
    Checker c;
    c.truth(oracle::extend(3, {0, 0}).b == oracle::Vec{0, 0, 0}, "oracle");
    c.eq(extend(3, big({0, 0})), empty3(), "extend");
    return c.result();
  });
  add("coords", "extend n=4 (0,0,1,1) is L_{1,2}+L_{1,3}", [] {
    Checker c;
    const oracle::Ext o = oracle::extend(4, {0, 0, 1, 1});
    c.truth(o.b == oracle::Vec{-2, 1, 1, 0} && o.a == oracle::Vec{0, 0, 0, 0}, "oracle " + vec_str(o.b));
    const oracle::Ext e12 = oracle::elementary(4, 1, 2), e13 = oracle::elementary(4, 1, 3);
    c.truth(e12.b[0] + e13.b[0] == -2 && e12.b[1] + e13.b[1] == 1 && e12.b[2] + e13.b[2] == 1, "additivity oracle");
    c.eq(extend(4, big({0, 0, 1, 1})), coords({0, 0, 0, 0}, {-2, 1, 1, 0}), "extend");
    return c.result();
  });
  add("coords", "extend rejects wrong length", [] {
    Checker c;
    c.throws<MalformedInput>([] { extend(3, big({0, 1, 2})); }, "length 3 for n=3");
    return c.result();
  });

  // ---- coords: reduce
  add("coords", "reduce L_{1,2}", [] {
    Checker c;
    c.eq(reduce(l12()), ReducedCoords<BigInt>(3, big({0, 1})), "reduce");
    return c.result();
  });
  add("coords", "reduce n=4 b=(-2,1,1,0)", [] {
    Checker c;
    c.eq(reduce(coords({0, 0, 0, 0}, {-2, 1, 1, 0})), ReducedCoords<BigInt>(4, big({0, 0, 1, 1})), "reduce");
    return c.result();
  });
  add("coords", "reduce empty", [] {
    Checker c;
    c.eq(reduce(empty3()), ReducedCoords<BigInt>(3, big({0, 0})), "reduce");
    return c.result();
  });

  // ---- coords: arc_intersections / from_arcs
  add("coords", "arcs of L_{1,2}", [] {
    Checker c;
    const oracle::Arcs o = oracle::arcs(to_oracle(l12()));
    c.truth(o.alpha == oracle::Vec{1, 1, 1, 1, 0, 0} && o.beta == oracle::Vec{0, 2, 0, 0}, "oracle");
    c.eq(arc_intersections(l12()), ArcIntersections<BigInt>(3, big({1, 1, 1, 1, 0, 0}), big({0, 2, 0, 0})), "arcs");
    return c.result();
  });
  add("coords", "arcs of empty", [] {
    Checker c;
    c.eq(arc_intersections(empty3()), ArcIntersections<BigInt>(3, big({0, 0, 0, 0, 0, 0}), big({0, 0, 0, 0})),
         "arcs");
    return c.result();
  });
  add("coords", "arcs of (0,-1,0;-1,0,1)", [] {
    Checker c;
    const oracle::Arcs o = oracle::arcs(to_oracle(sigma1_l23()));
    c.truth(o.alpha == oracle::Vec{1, 1, 2, 0, 1, 1} && o.beta == oracle::Vec{0, 2, 2, 0},
            "oracle " + vec_str(o.alpha));
    c.eq(arc_intersections(sigma1_l23()), ArcIntersections<BigInt>(3, big({1, 1, 2, 0, 1, 1}), big({0, 2, 2, 0})),
         "arcs");
    return c.result();
  });
  add("coords", "from_arcs of L_{1,2} arcs", [] {
    Checker c;
    c.eq(from_arcs(ArcIntersections<BigInt>(3, big({1, 1, 1, 1, 0, 0}), big({0, 2, 0, 0}))), l12(), "from_arcs");
    return c.result();
  });
  add("coords", "from_arcs of zero arcs", [] {
    Checker c;
    c.eq(from_arcs(ArcIntersections<BigInt>(3, big({0, 0, 0, 0, 0, 0}), big({0, 0, 0, 0}))), empty3(), "from_arcs");
    return c.result();
  });
  add("coords", "from_arcs of (1,1,2,0,1,1;0,2,2,0)", [] {
    Checker c;
    c.eq(from_arcs(ArcIntersections<BigInt>(3, big({1, 1, 2, 0, 1, 1}), big({0, 2, 2, 0}))), sigma1_l23(),
         "from_arcs");
    return c.result();
  });

  // ---- coords: elementary_coords
  add("coords", "elementary (1,2) n=3", [] {
    Checker c;
    c.eq(elementary_coords({1, 2}, 3), coords({0, 0, 0}, {-1, 1, 0}), "L_{1,2}");
    c.truth(is_relaxed(elementary_coords({1, 2}, 3)), "relaxed");
    return c.result();
  });
  add("coords", "elementary (2,3) n=3", [] {
    Checker c;
    c.eq(elementary_coords({2, 3}, 3), coords({0, 0, 0}, {0, -1, 1}), "L_{2,3}");
    return c.result();
  });
  add("coords", "elementary (1,3) n=3 rejected", [] {
    Checker c;
    c.throws<InvalidElementary>([] { elementary_coords({1, 3}, 3); }, "(1,n)");
    return c.result();
  });

  // ---- coords: norm, is_relaxed
  add("coords", "norm", [] {
    Checker c;
    c.eq(norm(l12()), BigInt(2), "L_{1,2}");
    c.eq(norm(empty3()), BigInt(0), "empty");
    c.eq(norm(sigma1_l23()), BigInt(3), "(0,-1,0;-1,0,1)");
    return c.result();
  });
  add("coords", "is_relaxed", [] {
    Checker c;
    c.truth(is_relaxed(l12()), "L_{1,2}");
    c.truth(!is_relaxed(sigma2_l12()), "(0,1,0;-1,0,1)");
    c.truth(is_relaxed(empty3()), "empty");
    return c.result();
  });

  // ---- coords: disjoint_union
  add("coords", "disjoint_union L_{1,2} + L_{1,3} on n=4", [] {
    Checker c;
    c.eq(disjoint_union(elem(1, 2, 4), elem(1, 3, 4)), coords({0, 0, 0, 0}, {-2, 1, 1, 0}), "union");
    return c.result();
  });
  add("coords", "disjoint_union with empty", [] {
    Checker c;
    c.eq(disjoint_union(sigma2_l12(), empty3()), sigma2_l12(), "L + empty");
    return c.result();
  });
  add("coords", "disjoint_union of linked curves rejected", [] {
    Checker c;
    c.eq(oracle::linking(1, 2, 2, 3), 2, "linking oracle");
    c.throws<NotDisjoint>([] { disjoint_union(l12(), l23()); }, "L_{1,2} + L_{2,3}");
    return c.result();
  });

  // ---- coords: validate
  add("coords", "validate", [] {
    Checker c;
    c.truth(validate(l12()).ok(), "L_{1,2} valid");
    const oracle::Ext forced = oracle::extend(3, {0, 1});
    c.eq(forced.b[0], -1L, "oracle forced b_0");
    c.truth(!validate(coords({0, 0, 0}, {-2, 1, 1})).ok(), "b=(-2,1,1) invalid");
    c.truth(!validate(coords({1, 0, 0}, {0, 0, 0})).ok(), "a_0 != 0 invalid");
    return c.result();
  });

  // ---- braid
  add("braid", "sigma_1 fixes L_{1,2}", [] {
    Checker c;
    c.truth(oracle::sigma(to_oracle(l12()), 1) == to_oracle(l12()), "oracle");
    c.eq(apply_generator(l12(), 1), l12(), "apply");
    return c.result();
  });
  add("braid", "sigma_2 on L_{1,2}", [] {
    Checker c;
    c.truth(oracle::sigma(to_oracle(l12()), 2) == to_oracle(sigma2_l12()), "oracle");
    c.eq(apply_generator(l12(), 2), sigma2_l12(), "apply");
    return c.result();
  });
  add("braid", "sigma_1 on L_{2,3}", [] {
    Checker c;
    c.truth(oracle::sigma(to_oracle(l23()), 1) == to_oracle(sigma1_l23()), "oracle");
    c.eq(apply_generator(l23(), 1), sigma1_l23(), "apply");
    return c.result();
  });
  add("braid", "empty word is identity", [] {
    Checker c;
    c.eq(apply_word(sigma1_l23(), BraidWord(3)), sigma1_l23(), "apply");
    return c.result();
  });
  add("braid", "word (2,1) sends L_{1,2} to L_{2,3}", [] {
    Checker c;
    c.truth(oracle::sigma(oracle::sigma(to_oracle(l12()), 2), 1) == to_oracle(l23()), "oracle");
    c.eq(apply_word(l12(), BraidWord(3, {2, 1})), l23(), "apply");
    return c.result();
  });
  add("braid", "sigma_1^10 fixes L_{1,2}", [] {
    Checker c;
    c.eq(apply_word(l12(), BraidWord(3, std::vector<int>(10, 1))), l12(), "apply");
    return c.result();
  });

  // ---- relax
  add("relax", "parse n=4 b=(-2,1,1,0)", [] {
    Checker c;
    const auto o = oracle::parse(to_oracle(coords({0, 0, 0, 0}, {-2, 1, 1, 0})));
    c.truth(o == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}, "oracle");
    c.eq(parse_relaxed(coords({0, 0, 0, 0}, {-2, 1, 1, 0})).components,
         std::vector<ElementaryCurve>{{1, 2}, {1, 3}}, "parse");
    return c.result();
  });
  add("relax", "parse empty", [] {
    Checker c;
    c.truth(parse_relaxed(empty3()).empty(), "parse");
    return c.result();
  });
  add("relax", "parse L_{2,3}", [] {
    Checker c;
    c.eq(parse_relaxed(l23()).components, std::vector<ElementaryCurve>{{2, 3}}, "parse");
    return c.result();
  });
  add("relax", "relax of relaxed input is trivial", [] {
    Checker c;
    const auto r = relax(elem(1, 3, 4));
    c.truth(r.word.empty(), "empty word");
    c.eq(r.relaxed, elem(1, 3, 4), "unchanged");
    return c.result();
  });
  add("relax", "relax sigma_2(L_{1,2})", [] {
    Checker c;
    const auto [ow, oc] = oracle::relax(to_oracle(sigma2_l12()));
    c.truth(ow == std::vector<int>{1} && oc == to_oracle(l23()), "oracle trace");
    const auto r = relax(sigma2_l12());
    c.eq(r.word, BraidWord(3, {1}), "word");
    c.eq(r.relaxed, l23(), "relaxed");
    return c.result();
  });
  add("relax", "relax sigma_1(L_{2,3}) postconditions", [] {
    Checker c;
    const auto r = relax(sigma1_l23());
    const auto [ow, oc] = oracle::relax(to_oracle(sigma1_l23()));
    c.truth(r.word.letters().size() == ow.size() &&
                std::equal(ow.begin(), ow.end(), r.word.letters().begin()),
            "matches oracle trace");
    c.truth(is_relaxed(r.relaxed), "relaxed");
    c.eq(apply_word(sigma1_l23(), r.word), r.relaxed, "word action");
    c.truth(r.word.size() <= 9 * 3, "length <= n^2 * norm");
    return c.result();
  });

  // ---- intersect
  add("intersect", "above_below L_{1,2}", [] {
    Checker c;
    const auto ab = above_below(l12());
    c.eq(ab, AboveBelowCounts<BigInt>(big({0, 0, 0}), big({0, 0, 0})), "counts");
    return c.result();
  });
  add("intersect", "above_below L_{2,3}", [] {
    Checker c;
    const oracle::Arcs o = oracle::arcs(to_oracle(l23()));
    c.truth(o.alpha == oracle::Vec{0, 0, 1, 1, 1, 1}, "oracle arcs");
    c.eq(above_below(l23()), AboveBelowCounts<BigInt>(big({0, 0, 0}), big({0, 0, 0})), "counts");
    return c.result();
  });
  add("intersect", "above_below (0,-1,0;-1,0,1)", [] {
    Checker c;
    c.eq(above_below(sigma1_l23()), AboveBelowCounts<BigInt>(big({0, 2, 0}), big({0, 0, 0})), "counts");
    return c.result();
  });
  add("intersect", "iota(L_{1,2}, L_{1,2}) = 0", [] {
    Checker c;
    c.eq(oracle::intersect_elementary(to_oracle(l12()), 1, 2), 0L, "oracle");
    c.eq(intersect_elementary(l12(), {1, 2}), BigInt(0), "elementary formula");
    return c.result();
  });
  add("intersect", "iota(L_{2,3}, L_{1,2}) = 2", [] {
    Checker c;
    c.eq(oracle::linking(2, 3, 1, 2), 2, "linking oracle");
    c.eq(oracle::intersect_elementary(to_oracle(l23()), 1, 2), 2L, "oracle elementary formula");
    c.eq(intersect_elementary(l23(), {1, 2}), BigInt(2), "elementary formula");
    return c.result();
  });
  add("intersect", "iota(L_{1,3}, L_{1,2}) = 0 on n=4", [] {
    Checker c;
    c.eq(oracle::linking(1, 3, 1, 2), 0, "linking oracle");
    c.eq(intersect_elementary(elem(1, 3, 4), {1, 2}), BigInt(0), "elementary formula");
    return c.result();
  });
  add("intersect", "iota(sigma_2(L_{1,2}), L_{2,3}) = 2", [] {
    Checker c;
    c.eq(oracle::intersection_number(to_oracle(sigma2_l12()), to_oracle(l23())), 2L, "oracle pipeline");
    c.truth(oracle::sigma(to_oracle(l23()), 2) == to_oracle(l23()), "sigma_2 fixes L_{2,3}");
    c.eq(oracle::linking(1, 2, 2, 3), 2, "linking oracle");
    c.eq(intersection_number(sigma2_l12(), l23()), BigInt(2), "algorithm");
    return c.result();
  });
  add("intersect", "iota(c, c) = 0", [] {
    Checker c;
    c.eq(intersection_number(sigma1_l23(), sigma1_l23()), BigInt(0), "self");
    c.eq(intersection_number(sigma2_l12(), sigma2_l12()), BigInt(0), "self");
    return c.result();
  });
  add("intersect", "iota(c, empty) = 0", [] {
    Checker c;
    c.eq(intersection_number(sigma1_l23(), empty3()), BigInt(0), "c, empty");
    c.eq(intersection_number(empty3(), sigma1_l23()), BigInt(0), "empty, c");
    return c.result();
  });

  // ---- cli
  add("cli", "convert reduced (0,1) to extended", [] {
    Checker c;
    const CliRun r = cli({"convert", "--extended"}, "n = 3\nreduced = 0 1\n");
    c.eq(r.code, 0, "exit");
    c.eq(r.out, std::string("n = 3\na = 0 0 0\nb = -1 1 0\n"), "output");
    return c.result();
  });
  add("cli", "convert L_{1,2} to arcs", [] {
    Checker c;
    const CliRun r = cli({"convert", "--arcs"}, "n = 3\na = 0 0 0\nb = -1 1 0\n");
    c.eq(r.code, 0, "exit");
    c.eq(r.out, std::string("n = 3\nalpha = 1 1 1 1 0 0\nbeta = 0 2 0 0\n"), "output");
    return c.result();
  });
  add("cli", "convert wrong reduced length exits 2", [] {
    Checker c;
    c.eq(cli({"convert"}, "n = 3\nreduced = 0 1 2\n").code, 2, "exit");
    return c.result();
  });
  add("cli", "act sigma_2 on L_{1,2}", [] {
    Checker c;
    const CliRun r = cli({"act", "--word", "2"}, "n = 3\nreduced = 0 1\n");
    c.eq(r.code, 0, "exit");
    c.eq(r.out, std::string("n = 3\na = 0 1 0\nb = -1 0 1\n"), "output");
    return c.result();
  });
  add("cli", "act empty word", [] {
    Checker c;
    const CliRun r = cli({"act", "--word", ""}, "n = 3\na = 0 -1 0\nb = -1 0 1\n");
    c.eq(r.code, 0, "exit");
    c.eq(r.out, std::string("n = 3\na = 0 -1 0\nb = -1 0 1\n"), "output");
    return c.result();
  });
  add("cli", "act out-of-range letter exits 2", [] {
    Checker c;
    c.eq(cli({"act", "--word", "5"}, "n = 3\nreduced = 0 1\n").code, 2, "exit");
    return c.result();
  });
  add("cli", "relax (0,1,0;-1,0,1)", [] {
    Checker c;
    const CliRun r = cli({"relax"}, "n = 3\na = 0 1 0\nb = -1 0 1\n");
    c.eq(r.code, 0, "exit");
    c.eq(r.out, std::string("word = 1\nn = 3\na = 0 0 0\nb = 0 -1 1\n"), "output");
    return c.result();
  });
  add("cli", "parse n=4 b=(-2,1,1,0)", [] {
    Checker c;
    const CliRun r = cli({"parse"}, "n = 4\na = 0 0 0 0\nb = -2 1 1 0\n");
    c.eq(r.code, 0, "exit");
    c.eq(r.out, std::string("(1,2)\n(1,3)\n"), "output");
    return c.result();
  });
  add("cli", "parse non-relaxed exits 3", [] {
    Checker c;
    c.eq(cli({"parse"}, "n = 3\na = 0 1 0\nb = -1 0 1\n").code, 3, "exit");
    return c.result();
  });

  add("cli", "intersect sigma_2(L_{1,2}) with L_{2,3}", [] {
    Checker c;
    const std::string other = temp_document("l23", "n = 3\nreduced = 0 -1\n");
    const CliRun r = cli({"intersect", "-", other}, "n = 3\na = 0 1 0\nb = -1 0 1\n");
    c.eq(r.code, 0, "exit");
    c.eq(r.out, std::string("2\n"), "output");
    return c.result();
  });
  add("cli", "intersect document with itself", [] {
    Checker c;
    const std::string doc = temp_document("self", "n = 3\na = 0 1 0\nb = -1 0 1\n");
    const CliRun r = cli({"intersect", doc, doc});
    c.eq(r.code, 0, "exit");
    c.eq(r.out, std::string("0\n"), "output");
    return c.result();
  });
  add("cli", "intersect puncture mismatch exits 2", [] {
    Checker c;
    const std::string four = temp_document("four", "n = 4\nreduced = 0 0 1 1\n");
    c.eq(cli({"intersect", "-", four}, "n = 3\nreduced = 0 1\n").code, 2, "exit");
    return c.result();
  });

  // ---- bench
  add("bench", "random_multicurve target 0 is empty", [] {
    Checker c;
    c.eq(random_multicurve(5, 0, 7), DynnikovCoords::zero(5), "empty");
    return c.result();
  });
  add("bench", "random_multicurve is deterministic", [] {
    Checker c;
    c.eq(random_multicurve(6, 50, 11), random_multicurve(6, 50, 11), "same seed");
    return c.result();
  });
  add("bench", "random_multicurve n=5 target 100", [] {
    Checker c;
    const DynnikovCoords m = random_multicurve(5, 100, 1);
    c.truth(validate(m).ok(), "valid");
    c.truth(norm(m) >= 100, "norm >= 100 (got " + norm(m).get_str() + ")");
    return c.result();
  });
  add("bench", "run_scaling empty grid", [] {
    Checker c;
    c.truth(run_scaling({}, 3, 1).records.empty(), "no records");
    return c.result();
  });
  add("bench", "run_scaling one cell, three trials", [] {
    Checker c;
    BenchOptions opts;
    opts.min_seconds = 0;
    const ScalingReport r = run_scaling({{5, 20}}, 3, 1, opts);
    c.eq(r.records.size(), std::size_t{3}, "record count");
    for (const BenchRecord& rec : r.records) c.eq(rec.n, 5, "n");
    return c.result();
  });

  return ex;
}

}  // namespace

const std::vector<Example>& all_examples() {
  static const std::vector<Example> examples = build();
  return examples;
}

}  // namespace worked

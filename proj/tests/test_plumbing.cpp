#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcirc/error.hpp"
#include "qcirc/linalg.hpp"
#include "qcirc/plumbing.hpp"
#include "qcirc/sl2.hpp"

using namespace qcirc;
using namespace qcirc::plumbing;
using linalg::AbelianGroupDesc;
using linalg::IntMatrix;
using linalg::Integer;

namespace {

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

PlumbingGraph path(const std::vector<std::int64_t>& weights) {
  std::string text;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    text += "vertex p" + std::to_string(i) + " " + std::to_string(weights[i]) + "\n";
  }
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    text += "edge p" + std::to_string(i) + " p" + std::to_string(i + 1) + " +\n";
  }
  return parse_graph(text);
}

IntMatrix from_oracle(const oracle::Mat& m) {
  IntMatrix out(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m[r][c];
  }
  return out;
}

std::vector<IntString> hyperbolic_strings(std::size_t max_len, std::int64_t max_entry) {
  std::vector<IntString> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty() && std::any_of(cur.begin(), cur.end(), [](auto x) { return x >= 3; })) out.emplace_back(cur);
    if (cur.size() == max_len) return;
    for (std::int64_t v = 2; v <= max_entry; ++v) {
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

const IntMatrix kNegativeTriangle{{-2, 1, -1}, {1, -2, 1}, {-1, 1, -2}};

}  // namespace

TEST(ParseGraph, Examples) {
  const auto p = parse_graph("vertex a -2\nvertex b -2\nedge a b +\n");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE(p.is_tree());
  EXPECT_TRUE(is_linear(p));

  const auto two_cycle = parse_graph("vertex a -2\nvertex b -3\nedge a b +\nedge a b +\n");
  EXPECT_EQ(two_cycle.cycle_count(), 1u);
  EXPECT_TRUE(two_cycle.is_cycle());

  EXPECT_EQ(error_of([] {
              parse_graph("vertex a 0\nvertex b 0\nvertex c 0\nedge a b +\nedge b c +\nedge c a +\nedge a b -\n");
            }),
            ErrorCode::too_many_cycles);
}

TEST(ParseGraph, Errors) {
  EXPECT_EQ(error_of([] { parse_graph("vertex a 0\nvertex a 1\n"); }), ErrorCode::duplicate_vertex);
  EXPECT_EQ(error_of([] { parse_graph("vertex a 0\nedge a b +\n"); }), ErrorCode::dangling_edge);
  EXPECT_EQ(error_of([] { parse_graph("vertex a x\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(error_of([] { parse_graph("vertex a 0\nvertex b 0\nedge a b *\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(error_of([] { parse_graph("node a 0\n"); }), ErrorCode::parse_error);
}

TEST(ParseGraph, FormatRoundTrip) {
  const auto g = parse_graph("# seed\nvertex x -1\nvertex y -2\nvertex z 3\nedge x y +\nedge y z -\nedge z x +\n");
  EXPECT_EQ(parse_graph(format_graph(g)), g);
  EXPECT_EQ(canonical_form(parse_graph(format_graph(g))), canonical_form(g));
}

TEST(IntersectionForm, Examples) {
  EXPECT_EQ(intersection_form(path({-1, -2, -2, -1})),
            (IntMatrix{{-1, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -1}}));
  EXPECT_EQ(intersection_form(parabolic_cycle(3, +1)), kNegativeTriangle);
  EXPECT_EQ(intersection_form(parse_graph("vertex a -3\nedge a a +\n")), (IntMatrix{{-1}}));
  EXPECT_EQ(intersection_form(parse_graph("vertex a -2\nvertex b -3\nedge a b +\nedge a b +\n")),
            (IntMatrix{{-2, 2}, {2, -3}}));
}

TEST(IntersectionForm, MatchesDirectCycleForm) {
  for (const IntString& a : hyperbolic_strings(5, 5)) {
    std::vector<std::int64_t> w;
    for (auto x : a.entries) w.push_back(-x);
    ASSERT_EQ(intersection_form(cycle_plumbing_from_word({a, +1})), from_oracle(oracle::cycle_form(w, +1)));
  }
}

TEST(BoundaryHomology, Examples) {
  EXPECT_EQ(boundary_homology(path({-1, -2, -2, -1})), (AbelianGroupDesc{1, {}}));
  EXPECT_EQ(boundary_homology(cycle_plumbing_from_word({{2, 3}, +1})), (AbelianGroupDesc{1, {2}}));
  EXPECT_EQ(boundary_homology(parabolic_cycle(3, +1)), (AbelianGroupDesc{1, {4}}));
  EXPECT_EQ(boundary_homology(path({-2, -2, -2})), (AbelianGroupDesc{0, {4}}));
}

TEST(CyclePlumbing, FromWord) {
  const auto g = cycle_plumbing_from_word({{2, 3}, +1});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.vertices()[0].weight, -2);
  EXPECT_EQ(g.vertices()[1].weight, -3);
  EXPECT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.cycle_sign(), 1);

  const auto tri = cycle_plumbing_from_word(sl2::parse_word("-:2,2,2"));
  EXPECT_EQ(intersection_form(tri), kNegativeTriangle);
  EXPECT_EQ(error_of([] { cycle_plumbing_from_word({{2, 2}, +1}); }), ErrorCode::unsupported_word);
  EXPECT_EQ(error_of([] { cycle_plumbing_from_word({{3, 1}, +1}); }), ErrorCode::unsupported_word);
}

TEST(CycleMonodromy, Examples) {
  const auto one = cycle_monodromy(parse_graph("vertex a -3\nedge a a +\n"));
  EXPECT_EQ(one.matrix, sl2::SL2Element(3, 1, -1, 0));
  EXPECT_EQ(one.sign, 1);

  const auto tri = cycle_monodromy(parabolic_cycle(3, +1));
  EXPECT_EQ(tri.signed_matrix().trace(), -2);
  EXPECT_EQ(tri.sign, -1);

  EXPECT_EQ(cycle_monodromy(cycle_plumbing_from_word({{2, 3}, +1})).signed_matrix().trace(), 4);
  EXPECT_EQ(error_of([] { cycle_monodromy(path({-2, -2})); }), ErrorCode::not_cyclic);
}

TEST(CycleMonodromy, ParabolicCyclesForBothExponents) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int s : {+1, -1}) {
      const auto g = parabolic_cycle(n, s);
      const auto m = cycle_monodromy(g).signed_matrix();
      ASSERT_EQ(m.trace(), -2) << n << " " << s;
      ASSERT_EQ(sl2::classify(m).kind, sl2::TraceKind::parabolic);
      ASSERT_EQ(abs(linalg::det(intersection_form(g))), 4);
    }
  }
}

TEST(CycleMonodromy, DeterminantMatchesTraceDefect) {
  for (const IntString& a : hyperbolic_strings(6, 6)) {
    const auto g = cycle_plumbing_from_word({a, +1});
    const Integer tr = sl2::word_to_matrix({a, +1}).trace();
    ASSERT_EQ(abs(linalg::det(intersection_form(g))), tr - 2) << format_int_string(a);
    ASSERT_EQ(cycle_monodromy(g).signed_matrix().trace(), tr);
  }
}

TEST(Join, Examples) {
  const auto zero = parse_graph("vertex v 0\n");
  const auto zero2 = parse_graph("vertex w 0\n");
  const auto j = join(zero, "v", zero2, "w");
  EXPECT_EQ(j.size(), 1u);
  EXPECT_EQ(j.vertices()[0].weight, 0);

  const auto p = path({-2, -2});
  const auto single = parse_graph("vertex q -1\n");
  EXPECT_EQ(canonical_form(join(p, "p1", single, "q")), canonical_form(path({-2, -3})));

  // Name collisions get a suffix; the merged vertex keeps the first name.
  const auto clash = join(path({-2, -2}), "p0", path({-3, -4}), "p1");
  EXPECT_EQ(clash.size(), 3u);
  EXPECT_TRUE(clash.find("p0_2").has_value());
  EXPECT_EQ(clash.vertices()[clash.index_of("p0")].weight, -6);
  EXPECT_EQ(error_of([&] { join(p, "zz", single, "q"); }), ErrorCode::unknown_vertex);
}

TEST(SelfJoin, Examples) {
  const auto seed = path({-1, -2, -2, -1});
  const auto minus = self_join(seed, "p0", "p3", -1);
  EXPECT_EQ(minus.cycle_count(), 1u);
  EXPECT_EQ(minus.cycle_sign(), -1);
  EXPECT_EQ(intersection_form(minus), kNegativeTriangle);
  EXPECT_EQ(abs(linalg::det(intersection_form(minus))), 4);

  const auto plus = self_join(seed, "p0", "p3", +1);
  EXPECT_EQ(plus.cycle_sign(), 1);
  EXPECT_EQ(intersection_form(plus), (IntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}}));

  for (int s : {+1, -1}) {
    const auto loop = self_join(path({-2, -3}), "p0", "p1", s);
    ASSERT_EQ(loop.size(), 1u);
    ASSERT_EQ(loop.cycle_count(), 1u);
    ASSERT_EQ(loop.vertices()[0].weight, -5);
    ASSERT_EQ(intersection_form(loop), (IntMatrix{{-5 + 2 * s}}));
  }

  EXPECT_EQ(error_of([&] { self_join(seed, "p0", "p0", 1); }), ErrorCode::same_vertex);
  EXPECT_EQ(error_of([&] { self_join(minus, "p0", "p1", 1); }), ErrorCode::not_a_tree);
}

TEST(SelfJoin, AlwaysOneCycleWithRequestedSign) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> weight(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    // Random tree: each new vertex hangs off a random earlier one.
    const std::size_t n = 2 + trial % 6;
    std::string text;
    for (std::size_t i = 0; i < n; ++i) text += "vertex t" + std::to_string(i) + " " + std::to_string(weight(rng)) + "\n";
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t parent = rng() % i;
      text += "edge t" + std::to_string(parent) + " t" + std::to_string(i) + ((rng() & 1) ? " +\n" : " -\n");
    }
    const auto tree = parse_graph(text);
    const std::size_t a = rng() % n;
    std::size_t b = rng() % n;
    if (a == b) b = (b + 1) % n;
    const int s = (rng() & 1) ? 1 : -1;
    const auto g = self_join(tree, "t" + std::to_string(a), "t" + std::to_string(b), s);
    ASSERT_EQ(g.cycle_count(), 1u);
    ASSERT_EQ(g.cycle_sign(), s);
    ASSERT_TRUE(intersection_form(g).is_symmetric());
  }
}

TEST(JoinHypotheses, Examples) {
  const auto r0 = check_join_hypotheses(parse_graph("vertex v 0\n"), "v");
  EXPECT_TRUE(r0.boundary_is_s1xs2);
  EXPECT_TRUE(r0.complement_is_qs3);
  const auto r1 = check_join_hypotheses(parse_graph("vertex v 1\n"), "v");
  EXPECT_FALSE(r1.boundary_is_s1xs2);
  EXPECT_TRUE(r1.complement_is_qs3);
  const auto r2 = check_join_hypotheses(path({-1, -2, -2, -1}), "p1");
  EXPECT_TRUE(r2.boundary_is_s1xs2);
  EXPECT_TRUE(r2.complement_is_qs3);
  EXPECT_FALSE(r2.homology_level_only);
  EXPECT_EQ(error_of([] { check_join_hypotheses(parabolic_cycle(3, 1), "v0"); }), ErrorCode::not_a_tree);
}

TEST(CanonicalForm, InvariantUnderOrderPreservingRenaming) {
  const auto a = parse_graph("vertex a -2\nvertex b -3\nvertex c -4\nedge a b +\nedge b c +\nedge c a -\n");
  const auto b = parse_graph("vertex r -4\nvertex p -2\nvertex q -3\nedge q r +\nedge p q +\nedge r p -\n");
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(a), canonical_form(self_join(path({-2, -3, -4}), "p0", "p2", +1)));
}

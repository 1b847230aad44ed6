#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qcirc/error.hpp"
#include "qcirc/sl2.hpp"

using namespace qcirc;
using namespace qcirc::sl2;

namespace {

SL2Element from_oracle(const oracle::M2& m) { return SL2Element(m.a, m.b, m.c, m.d); }

MonodromyWord random_word(std::mt19937& rng, std::size_t max_len, int lo, int hi) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> entry(lo, hi);
  MonodromyWord w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.coeffs.entries.push_back(entry(rng));
  w.sign = (rng() & 1) ? 1 : -1;
  return w;
}

// Every string of length 1..max_len with entries in [2, max_entry].
std::vector<IntString> all_strings(std::size_t max_len, std::int64_t max_entry) {
  std::vector<IntString> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.emplace_back(cur);
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

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST(SL2Element, RejectsNonUnimodular) {
  EXPECT_EQ(error_of([] { SL2Element(1, 1, 1, 1); }), ErrorCode::not_unimodular);
}

TEST(SL2Element, Generators) {
  EXPECT_EQ(SL2Element::T(), SL2Element(1, 1, 0, 1));
  EXPECT_EQ(SL2Element::S(), SL2Element(0, 1, -1, 0));
  EXPECT_EQ(SL2Element::T_power(-4), SL2Element(1, -4, 0, 1));
  EXPECT_EQ(SL2Element::S() * SL2Element::S(), SL2Element::identity().negated());
  EXPECT_EQ(SL2Element(2, 1, 1, 1) * SL2Element(2, 1, 1, 1).inverse(), SL2Element::identity());
}

TEST(WordToMatrix, Examples) {
  EXPECT_EQ(word_to_matrix({{3}, +1}), SL2Element(3, 1, -1, 0));
  EXPECT_EQ(word_to_matrix({{2, 3}, +1}), SL2Element(5, 2, -3, -1));
  EXPECT_EQ(word_to_matrix({{}, -1}), SL2Element::identity().negated());
}

TEST(WordToMatrix, MatchesGeneratorProducts) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const MonodromyWord w = random_word(rng, 10, -9, 9);
    const SL2Element m = word_to_matrix(w);
    ASSERT_EQ(m, from_oracle(oracle::word_product(w.coeffs.entries, w.sign)));
    ASSERT_EQ(m.a() * m.d() - m.b() * m.c(), 1);
  }
}

TEST(WordToMatrix, Concatenation) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    MonodromyWord a = random_word(rng, 6, -5, 5);
    MonodromyWord b = random_word(rng, 6, -5, 5);
    a.sign = b.sign = +1;
    MonodromyWord ab = a;
    ab.coeffs.entries.insert(ab.coeffs.entries.end(), b.coeffs.entries.begin(), b.coeffs.entries.end());
    ASSERT_EQ(word_to_matrix(ab), word_to_matrix(a) * word_to_matrix(b));
  }
}

TEST(WordToMatrix, TraceRotationInvariant) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const MonodromyWord w = random_word(rng, 8, -6, 6);
    const Integer tr = word_to_matrix(w).trace();
    for (std::size_t r = 0; r < w.coeffs.size(); ++r) {
      ASSERT_EQ(word_to_matrix({w.coeffs.rotated(r), w.sign}).trace(), tr);
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(SL2Element(3, 1, -1, 0)), (Classification{TraceKind::hyperbolic, TraceSign::positive}));
  EXPECT_EQ(classify(SL2Element::identity().negated()), (Classification{TraceKind::parabolic, TraceSign::negative}));
  EXPECT_EQ(classify(SL2Element::S()), (Classification{TraceKind::elliptic, TraceSign::zero_trace}));
  EXPECT_EQ(classify(SL2Element(1, -1, 1, 0)), (Classification{TraceKind::elliptic, TraceSign::positive}));
  EXPECT_EQ(to_string(TraceSign::zero_trace), "zero-trace");
}

TEST(Classify, HyperbolicNormalForms) {
  for (const IntString& a : all_strings(6, 6)) {
    bool has_three = false;
    for (auto x : a.entries) has_three |= x >= 3;
    if (!has_three) continue;
    const SL2Element m = word_to_matrix({a, +1});
    ASSERT_EQ(classify(m), (Classification{TraceKind::hyperbolic, TraceSign::positive})) << format_int_string(a);
  }
}

TEST(TorsionOrder, Examples) {
  EXPECT_EQ(torsion_order(word_to_matrix({{3}, +1})), 1);
  EXPECT_EQ(torsion_order(word_to_matrix({{2, 3}, +1})), 2);
  EXPECT_EQ(torsion_order(SL2Element(-1, -5, 0, -1)), 4);
  EXPECT_EQ(error_of([] { torsion_order(SL2Element::T_power(7)); }), ErrorCode::degenerate_torsion);
  try {
    torsion_order(SL2Element::identity());
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "parabolic-positive: torsion formula degenerate");
  }
}

TEST(SquareTraceCheck, Examples) {
  const auto s3 = square_trace_check(word_to_matrix({{3}, +1}));
  EXPECT_EQ(s3.value, 5);
  EXPECT_FALSE(s3.is_square);
  const auto s333 = square_trace_check(word_to_matrix({{3, 3, 3}, +1}));
  EXPECT_EQ(s333.value, 320);
  EXPECT_FALSE(s333.is_square);
  EXPECT_EQ(error_of([] { square_trace_check(word_to_matrix({{2, 2}, +1})); }), ErrorCode::not_hyperbolic);
}

TEST(SquareTraceCheck, IsTorsionOfSquare) {
  for (const IntString& a : all_strings(5, 6)) {
    const SL2Element m = word_to_matrix({a, +1});
    if (classify(m).kind != TraceKind::hyperbolic) continue;
    const Integer tr = m.trace();
    ASSERT_EQ(torsion_order(m * m), tr * tr - 4);
    ASSERT_EQ(square_trace_check(m).value, tr * tr - 4);
  }
}

TEST(RotationEquivalent, Examples) {
  EXPECT_TRUE(rotation_equivalent({4, 2}, {2, 4}));
  EXPECT_TRUE(rotation_equivalent({4, 2}, {4, 2}));
  EXPECT_FALSE(rotation_equivalent({4, 2}, {2, 2}));
  EXPECT_FALSE(rotation_equivalent({3, 2, 2}, {3, 2}));
  EXPECT_FALSE(rotation_equivalent({3, 2, 4}, {4, 2, 3}));
}

TEST(WordText, ParseAndFormat) {
  EXPECT_EQ(parse_word("3,2,2"), (MonodromyWord{{3, 2, 2}, +1}));
  EXPECT_EQ(parse_word("-:2,2"), (MonodromyWord{{2, 2}, -1}));
  EXPECT_EQ(parse_word("+:"), (MonodromyWord{{}, +1}));
  for (const char* text : {"3,2,2", "-:2,2", "+:"}) {
    EXPECT_EQ(parse_word(format_word(parse_word(text))), parse_word(text));
  }
  EXPECT_EQ(parse_monodromy("-T^5"), SL2Element(-1, -5, 0, -1));
  EXPECT_EQ(parse_monodromy("-T^-5"), SL2Element(-1, 5, 0, -1));
  EXPECT_EQ(parse_monodromy("T"), SL2Element::T());
  EXPECT_EQ(parse_monodromy("2,3"), SL2Element(5, 2, -3, -1));
  EXPECT_EQ(format_element(SL2Element(5, 2, -3, -1)), "5,2,-3,-1");
  EXPECT_EQ(error_of([] { parse_word("3,,2"); }), ErrorCode::parse_error);
  EXPECT_EQ(error_of([] { parse_monodromy("T5"); }), ErrorCode::parse_error);
}

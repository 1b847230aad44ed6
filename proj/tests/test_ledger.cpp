#include <gtest/gtest.h>

#include "qcirc/error.hpp"
#include "qcirc/ledger.hpp"
#include "qcirc/linalg.hpp"
#include "qcirc/obstruct.hpp"
#include "qcirc/strings.hpp"

using namespace qcirc;
using namespace qcirc::ledger;
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

CertLedgerEntry eval(const std::string& text) {
  return ledger_evaluate(Ledger{}, parse_monodromy_descriptor(text)).first;
}

const char* kHistory = R"(# linear S1xS2 seed and a self-join closing it up
graph seed
vertex p0 -1
vertex p1 -2
vertex p2 -2
vertex p3 -1
edge p0 p1 +
edge p1 p2 +
edge p2 p3 +
end
selfjoin neg seed p0 p3 -
selfjoin pos seed p0 p3 +
graph cap
vertex c0 -2
vertex c1 -2
edge c0 c1 +
end
join grown seed p1 cap c0
selfjoin grown_neg grown p0 p3 -
graph pair
vertex q0 -1
vertex q1 -1
edge q0 q1 +
end
join doubled seed p1 pair q0
graph lens
vertex l0 -2
vertex l1 -2
vertex l2 -2
edge l0 l1 +
edge l1 l2 +
end
)";

// "word:<word>" or "matrix:a,b,c,d" back to a matrix.
sl2::SL2Element monodromy_of_key(const std::string& key) {
  const std::string body = key.substr(key.find(':') + 1);
  if (key.rfind("word:", 0) == 0) return sl2::word_to_matrix(sl2::parse_word(body));
  const IntString e = parse_int_string(body);
  return sl2::SL2Element(static_cast<long>(e[0]), static_cast<long>(e[1]), static_cast<long>(e[2]),
                         static_cast<long>(e[3]));
}

}  // namespace

TEST(LedgerEval, MonodromyExamples) {
  const auto para = eval("-T^5");
  EXPECT_EQ(para.status, Status::bounds_qsb);
  EXPECT_EQ(para.reason(), "negative-parabolic");

  const auto three = eval("3");
  EXPECT_EQ(three.status, Status::bounds_qsb);
  EXPECT_EQ(three.reason(), "hyperbolic-family(k=0;x=0)");

  const auto obstructed = eval("2,2,3");
  EXPECT_EQ(obstructed.status, Status::obstructed);
  EXPECT_EQ(obstructed.reason(), "torsion=3-not-square");
  EXPECT_EQ(obstructed.report_line(), "descriptor=word:2,2,3 status=obstructed reason=torsion=3-not-square");

  EXPECT_EQ(eval("-:2,2,2").status, Status::bounds_qsb);
  EXPECT_EQ(eval("T^4").status, Status::unknown);
  // tr(2,5) = 8: torsion 6 is not a square.
  EXPECT_EQ(eval("2,5").status, Status::obstructed);
  // tr(4,5) - 2 = 16 but (4,5) is not a family string.
  EXPECT_EQ(strings::recognize_family({4, 5}), std::nullopt);
  EXPECT_EQ(eval("4,5").status, Status::unknown);
}

TEST(LedgerEval, MalformedDescriptor) {
  EXPECT_EQ(error_of([] { parse_monodromy_descriptor("3,x"); }), ErrorCode::malformed_descriptor);
  EXPECT_EQ(error_of([] { parse_monodromy_descriptor("T^"); }), ErrorCode::malformed_descriptor);
}

TEST(LedgerEval, ConstructionHistory) {
  const auto constructions = parse_history(kHistory);
  ASSERT_EQ(constructions.size(), 9u);
  Ledger book;
  std::map<std::string, CertLedgerEntry> by_id;
  for (const auto& [id, c] : constructions) {
    auto [entry, next] = ledger_evaluate(book, c);
    EXPECT_GE(next.size(), book.size());
    book = std::move(next);
    by_id.emplace(id, entry);
  }
  EXPECT_EQ(by_id.at("seed").status, Status::bounds_qsb);
  EXPECT_EQ(by_id.at("seed").reason(), "s1xs2-base");
  EXPECT_EQ(by_id.at("neg").status, Status::bounds_qsb);
  EXPECT_EQ(by_id.at("neg").reason(), "s1xs2-base>self-join(det=-4)");
  // The + self-join has det 0, and its boundary torsion is 3.
  EXPECT_EQ(by_id.at("pos").status, Status::obstructed);
  EXPECT_EQ(by_id.at("lens").status, Status::unknown);
  EXPECT_NE(by_id.at("grown").status, Status::bounds_qsb);
  EXPECT_EQ(by_id.at("doubled").status, Status::bounds_qsb);
  EXPECT_EQ(by_id.at("doubled").reason(), "s1xs2-base>join(linear-hypothesis)");
}

TEST(LedgerEval, CertifiedEntriesHaveSquareTorsion) {
  Ledger book;
  for (const char* d : {"-T^5", "-T^-3", "3", "4,2", "3,3,3", "5,2,2", "4,3,2,3", "2,2,3", "2,5", "3,3"}) {
    book = ledger_evaluate(std::move(book), parse_monodromy_descriptor(d)).second;
  }
  std::map<std::string, plumbing::PlumbingGraph> graphs;
  for (const auto& [id, c] : parse_history(kHistory)) {
    book = ledger_evaluate(std::move(book), c).second;
    graphs.emplace(canonical_descriptor(Descriptor{c}), c->graph);
  }
  std::size_t certified = 0;
  for (const auto& [key, entry] : book.entries()) {
    if (entry.status != Status::bounds_qsb) continue;
    ++certified;
    Integer torsion;
    if (key.rfind("graph:", 0) == 0) {
      torsion = plumbing::boundary_homology(graphs.at(key)).torsion_order();
    } else {
      torsion = sl2::torsion_order(monodromy_of_key(key));
    }
    ASSERT_EQ(obstruct::square_order_obstruction(torsion), obstruct::SquareTest::pass) << key;
  }
  EXPECT_GE(certified, 6u);
}

TEST(Ledger, NeverDowngrades) {
  Ledger book = ledger_evaluate(Ledger{}, parse_monodromy_descriptor("3,3,3")).second;
  CertLedgerEntry worse{"word:3,3,3", Status::unknown, {"forced"}};
  book = book.with(worse);
  EXPECT_EQ(book.find("word:3,3,3")->status, Status::bounds_qsb);
  EXPECT_EQ(book.find("word:9,9"), nullptr);
}

TEST(History, Errors) {
  EXPECT_EQ(error_of([] { parse_history("join x a v b w\n"); }), ErrorCode::malformed_descriptor);
  EXPECT_EQ(error_of([] { parse_history("graph g\nvertex a 0\n"); }), ErrorCode::malformed_descriptor);
  EXPECT_EQ(error_of([] { parse_history("frobnicate\n"); }), ErrorCode::malformed_descriptor);
  EXPECT_EQ(error_of([] { parse_history("graph g\nvertex a 0\nend\ngraph g\nvertex b 0\nend\n"); }),
            ErrorCode::malformed_descriptor);
}

#pragma once

// Certification ledger: which torus bundles and single-cycle plumbed
// 3-manifolds are known to bound rational homology circles, which are ruled
// out by the square-order obstruction, and which are undecided.
//
// Certificates come from three axioms (negative parabolic monodromy, the
// hyperbolic family, linear S1xS2 seeds) closed under join and self-join.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qcirc/plumbing.hpp"
#include "qcirc/sl2.hpp"

namespace qcirc::ledger {

enum class Status { bounds_qsb, obstructed, unknown };
std::string_view to_string(Status s);

struct Construction;
using ConstructionPtr = std::shared_ptr<const Construction>;

/// A plumbing graph together with the steps that produced it.
struct Construction {
  enum class Kind { seed, join, self_join };

  Kind kind = Kind::seed;
  plumbing::PlumbingGraph graph;
  ConstructionPtr left;   // join: first tree; self_join: the tree
  ConstructionPtr right;  // join only
  std::string v1;
  std::string v2;
  int sign = +1;  // self_join only
};

ConstructionPtr seed(plumbing::PlumbingGraph g);
ConstructionPtr join_step(ConstructionPtr left, std::string v1, ConstructionPtr right, std::string v2);
ConstructionPtr self_join_step(ConstructionPtr tree, std::string v1, std::string v2, int sign);

using Descriptor = std::variant<sl2::MonodromyWord, sl2::SL2Element, ConstructionPtr>;

/// "word:3,2,2", "matrix:-1,-5,0,-1" or "graph:w=..;e=..".
std::string canonical_descriptor(const Descriptor& d);

struct CertLedgerEntry {
  std::string descriptor;
  Status status = Status::unknown;
  /// bounds-QSB: the certificate chain, axiom first. Otherwise a single
  /// explanatory step.
  std::vector<std::string> chain;

  std::string reason() const;
  /// "descriptor=<..> status=<..> reason=<..>"
  std::string report_line() const;
};

/// Evaluated entries keyed by canonical descriptor. Passed and returned by
/// value; evaluation never mutates a ledger in place.
class Ledger {
 public:
  const CertLedgerEntry* find(std::string_view descriptor) const;
  /// A copy with the entry added; an existing bounds-QSB entry is kept.
  Ledger with(CertLedgerEntry entry) const&;
  Ledger with(CertLedgerEntry entry) &&;
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::string, CertLedgerEntry, std::less<>>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, CertLedgerEntry, std::less<>> entries_;
};

/// Evaluates a descriptor (recursively evaluating construction inputs) and
/// returns its entry plus the ledger extended with every entry computed.
/// Pass an rvalue to avoid copying a large ledger.
std::pair<CertLedgerEntry, Ledger> ledger_evaluate(Ledger ledger, const Descriptor& d);

/// Word ("3,2,2", "-:2,2") or signed parabolic power ("-T^5").
Descriptor parse_monodromy_descriptor(std::string_view text);

/// Construction history text:
///   graph <id>            followed by vertex/edge lines and "end"
///   join <id> <a> <va> <b> <vb>
///   selfjoin <id> <a> <v1> <v2> <+|->
/// Returns the named constructions in definition order.
std::vector<std::pair<std::string, ConstructionPtr>> parse_history(std::string_view text);

}  // namespace qcirc::ledger

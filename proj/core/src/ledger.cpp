#include "qcirc/ledger.hpp"

#include <sstream>

#include "qcirc/error.hpp"
#include "qcirc/linalg.hpp"
#include "qcirc/strings.hpp"

namespace qcirc::ledger {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::bounds_qsb: return "bounds-QSB";
    case Status::obstructed: return "obstructed";
    case Status::unknown: return "unknown";
  }
  return "?";
}

ConstructionPtr seed(plumbing::PlumbingGraph g) {
  auto c = std::make_shared<Construction>();
  c->kind = Construction::Kind::seed;
  c->graph = std::move(g);
  return c;
}

ConstructionPtr join_step(ConstructionPtr left, std::string v1, ConstructionPtr right, std::string v2) {
  auto c = std::make_shared<Construction>();
  c->kind = Construction::Kind::join;
  c->graph = plumbing::join(left->graph, v1, right->graph, v2);
  c->left = std::move(left);
  c->right = std::move(right);
  c->v1 = std::move(v1);
  c->v2 = std::move(v2);
  return c;
}

ConstructionPtr self_join_step(ConstructionPtr tree, std::string v1, std::string v2, int sign) {
  auto c = std::make_shared<Construction>();
  c->kind = Construction::Kind::self_join;
  c->graph = plumbing::self_join(tree->graph, v1, v2, sign);
  c->left = std::move(tree);
  c->v1 = std::move(v1);
  c->v2 = std::move(v2);
  c->sign = sign;
  return c;
}

std::string canonical_descriptor(const Descriptor& d) {
  if (const auto* w = std::get_if<sl2::MonodromyWord>(&d)) return "word:" + sl2::format_word(*w);
  if (const auto* m = std::get_if<sl2::SL2Element>(&d)) return "matrix:" + sl2::format_element(*m);
  return "graph:" + plumbing::canonical_form(std::get<ConstructionPtr>(d)->graph);
}

std::string CertLedgerEntry::reason() const {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += '>';
    out += chain[i];
  }
  return out;
}

std::string CertLedgerEntry::report_line() const {
  return "descriptor=" + descriptor + " status=" + std::string(to_string(status)) + " reason=" + reason();
}

const CertLedgerEntry* Ledger::find(std::string_view descriptor) const {
  auto it = entries_.find(descriptor);
  return it == entries_.end() ? nullptr : &it->second;
}

Ledger Ledger::with(CertLedgerEntry entry) const& {
  Ledger out = *this;
  return std::move(out).with(std::move(entry));
}

Ledger Ledger::with(CertLedgerEntry entry) && {
  auto it = entries_.find(entry.descriptor);
  if (it == entries_.end() || it->second.status != Status::bounds_qsb) {
    entries_.insert_or_assign(entry.descriptor, std::move(entry));
  }
  return std::move(*this);
}

namespace {

using linalg::Integer;

CertLedgerEntry make_entry(std::string descriptor, Status status, std::vector<std::string> chain) {
  return CertLedgerEntry{std::move(descriptor), status, std::move(chain)};
}

// Returns the obstruction step if the torsion order is not a perfect square.
std::optional<std::string> square_obstruction(const Integer& torsion) {
  if (linalg::is_perfect_square(torsion)) return std::nullopt;
  return "torsion=" + torsion.get_str() + "-not-square";
}

CertLedgerEntry finish(std::string descriptor, std::optional<std::vector<std::string>> certificate,
                       const std::optional<Integer>& torsion, std::string undecided_reason) {
  std::optional<std::string> obstruction;
  if (torsion) obstruction = square_obstruction(*torsion);
  if (certificate && obstruction) {
    throw Error(ErrorCode::internal, "ledger: " + descriptor + " is both certified and obstructed");
  }
  if (certificate) return make_entry(std::move(descriptor), Status::bounds_qsb, std::move(*certificate));
  if (obstruction) return make_entry(std::move(descriptor), Status::obstructed, {*obstruction});
  return make_entry(std::move(descriptor), Status::unknown, {std::move(undecided_reason)});
}

CertLedgerEntry evaluate_monodromy(std::string descriptor, const sl2::SL2Element& m,
                                   const std::optional<sl2::MonodromyWord>& word) {
  const Integer tr = m.trace();
  std::optional<std::vector<std::string>> certificate;
  if (tr == -2) {
    certificate = std::vector<std::string>{"negative-parabolic"};
  } else if (word && word->sign > 0) {
    if (auto p = strings::recognize_family(word->coeffs)) {
      certificate = std::vector<std::string>{"hyperbolic-family(" + strings::format_family_params(*p) + ")"};
    }
  }
  std::optional<Integer> torsion;
  std::string undecided = "no-certificate";
  if (tr == 2) {
    undecided = "positive-parabolic-torsion-degenerate";
  } else {
    torsion = sl2::torsion_order(m);
    undecided = "no-certificate(torsion=" + torsion->get_str() + ")";
  }
  return finish(std::move(descriptor), std::move(certificate), torsion, std::move(undecided));
}

struct Evaluator {
  Ledger ledger;

  CertLedgerEntry record(CertLedgerEntry entry) {
    const std::string key = entry.descriptor;
    ledger = std::move(ledger).with(std::move(entry));
    return *ledger.find(key);
  }

  CertLedgerEntry graph(const ConstructionPtr& c) {
    const auto& g = c->graph;
    std::string key = canonical_descriptor(Descriptor{c});
    const linalg::AbelianGroupDesc h = plumbing::boundary_homology(g);
    const Integer torsion = h.torsion_order();

    std::optional<std::vector<std::string>> certificate;
    std::string undecided = "no-certificate(torsion=" + torsion.get_str() + ")";

    switch (c->kind) {
      case Construction::Kind::seed: {
        if (g.is_cycle()) {
          const auto walk = *g.cycle_walk();
          sl2::MonodromyWord w;
          for (std::size_t v : walk.vertices) w.coeffs.entries.push_back(-g.vertices()[v].weight);
          w.sign = g.cycle_sign();
          CertLedgerEntry e = evaluate_monodromy(key, sl2::word_to_matrix(w), w);
          return record(std::move(e));
        }
        if (g.is_tree() && h == linalg::AbelianGroupDesc{1, {}}) {
          if (plumbing::is_linear(g)) {
            certificate = std::vector<std::string>{"s1xs2-base"};
          } else {
            undecided = "homology-s1xs2-seed-not-linear";
          }
        }
        break;
      }
      case Construction::Kind::join: {
        const CertLedgerEntry left = graph(c->left);
        const CertLedgerEntry right = graph(c->right);
        const auto hyp_left = plumbing::check_join_hypotheses(c->left->graph, c->v1);
        const auto hyp_right = plumbing::check_join_hypotheses(c->right->graph, c->v2);
        auto step = [](const plumbing::JoinHypothesisReport& r) {
          return std::string(r.homology_level_only ? "join(homology-level-hypothesis)" : "join(linear-hypothesis)");
        };
        if (hyp_left.boundary_is_s1xs2 && hyp_left.complement_is_qs3 && right.status == Status::bounds_qsb) {
          certificate = right.chain;
          certificate->push_back(step(hyp_left));
        } else if (hyp_right.boundary_is_s1xs2 && hyp_right.complement_is_qs3 && left.status == Status::bounds_qsb) {
          certificate = left.chain;
          certificate->push_back(step(hyp_right));
        }
        break;
      }
      case Construction::Kind::self_join: {
        const CertLedgerEntry parent = graph(c->left);
        const Integer d = linalg::det(plumbing::intersection_form(g));
        if (parent.status == Status::bounds_qsb && d != 0) {
          certificate = parent.chain;
          certificate->push_back("self-join(det=" + d.get_str() + ")");
        } else if (d == 0) {
          undecided = "self-join-det-zero";
        }
        break;
      }
    }
    return record(finish(std::move(key), std::move(certificate), torsion, std::move(undecided)));
  }

  CertLedgerEntry operator()(const sl2::MonodromyWord& w) {
    return record(evaluate_monodromy(canonical_descriptor(Descriptor{w}), sl2::word_to_matrix(w), w));
  }
  CertLedgerEntry operator()(const sl2::SL2Element& m) {
    return record(evaluate_monodromy(canonical_descriptor(Descriptor{m}), m, std::nullopt));
  }
  CertLedgerEntry operator()(const ConstructionPtr& c) {
    if (!c) throw Error(ErrorCode::malformed_descriptor, "null construction");
    return graph(c);
  }
};

}  // namespace

std::pair<CertLedgerEntry, Ledger> ledger_evaluate(Ledger ledger, const Descriptor& d) {
  Evaluator ev{std::move(ledger)};
  CertLedgerEntry entry = std::visit(ev, d);
  return {std::move(entry), std::move(ev.ledger)};
}

Descriptor parse_monodromy_descriptor(std::string_view text) {
  try {
    if (text.find('T') != std::string_view::npos) return sl2::parse_monodromy(text);
    return sl2::parse_word(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::malformed_descriptor, e.what());
  }
}

std::vector<std::pair<std::string, ConstructionPtr>> parse_history(std::string_view text) {
  std::vector<std::pair<std::string, ConstructionPtr>> out;
  auto lookup = [&](const std::string& id, std::size_t lineno) -> ConstructionPtr {
    for (const auto& [name, c] : out) {
      if (name == id) return c;
    }
    throw Error(ErrorCode::malformed_descriptor,
                "line " + std::to_string(lineno) + ": unknown construction '" + id + "'");
  };
  auto define = [&](std::string id, ConstructionPtr c, std::size_t lineno) {
    for (const auto& entry : out) {
      if (entry.first == id) {
        throw Error(ErrorCode::malformed_descriptor,
                    "line " + std::to_string(lineno) + ": construction '" + id + "' defined twice");
      }
    }
    out.emplace_back(std::move(id), std::move(c));
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";

    if (tok[0] == "graph") {
      if (tok.size() != 2) throw Error(ErrorCode::malformed_descriptor, where + "expected 'graph <id>'");
      const std::size_t start = lineno;
      std::string body;
      bool closed = false;
      while (std::getline(in, line)) {
        ++lineno;
        std::istringstream bs(line);
        std::string first;
        bs >> first;
        if (first == "end") {
          closed = true;
          break;
        }
        body += line + "\n";
      }
      if (!closed) throw Error(ErrorCode::malformed_descriptor, where + "graph block without 'end'");
      define(tok[1], seed(plumbing::parse_graph(body)), start);
    } else if (tok[0] == "join") {
      if (tok.size() != 6) {
        throw Error(ErrorCode::malformed_descriptor, where + "expected 'join <id> <a> <va> <b> <vb>'");
      }
      define(tok[1], join_step(lookup(tok[2], lineno), tok[3], lookup(tok[4], lineno), tok[5]), lineno);
    } else if (tok[0] == "selfjoin") {
      if (tok.size() != 6 || (tok[5] != "+" && tok[5] != "-")) {
        throw Error(ErrorCode::malformed_descriptor, where + "expected 'selfjoin <id> <a> <v1> <v2> <+|->'");
      }
      define(tok[1], self_join_step(lookup(tok[2], lineno), tok[3], tok[4], tok[5] == "+" ? 1 : -1), lineno);
    } else {
      throw Error(ErrorCode::malformed_descriptor, where + "unknown directive '" + tok[0] + "'");
    }
  }
  return out;
}

}  // namespace qcirc::ledger

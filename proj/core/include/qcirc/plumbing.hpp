#pragma once

// Plumbing graphs with at most one cycle: intersection forms, boundary
// homology, cyclic plumbings of torus bundles, and the join / self-join
// constructions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcirc/linalg.hpp"
#include "qcirc/sl2.hpp"

namespace qcirc::plumbing {

struct Vertex {
  std::string name;
  std::int64_t weight = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Edge between vertex indices u and v; u == v is a self-loop.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  int sign = +1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The unique cycle, walked from its smallest vertex name toward the
/// smaller-named neighbor. edges[i] joins vertices[i] and vertices[i+1 mod m].
struct CycleWalk {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
};

/// A validated plumbing graph. Every instance has at most one independent
/// cycle, and at most one edge of that cycle (the closing edge of the
/// canonical walk) carries a "-" sign.
class PlumbingGraph {
 public:
  PlumbingGraph() = default;

  /// Validates names, endpoints and the cycle bound, then normalizes cycle
  /// signs by reorienting vertices (the product of cycle signs is kept).
  static PlumbingGraph build(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws unknown_vertex

  std::size_t component_count() const;
  /// edges - vertices + components
  std::size_t cycle_count() const;
  bool is_tree() const { return cycle_count() == 0 && component_count() == 1; }
  /// Whether every vertex lies on the (single) cycle.
  bool is_cycle() const;

  std::optional<CycleWalk> cycle_walk() const;
  /// Product of the signs of the cycle edges; +1 for a forest.
  int cycle_sign() const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Line-oriented text: "vertex <name> <weight>" and "edge <a> <b> <+|->";
/// '#' starts a comment.
PlumbingGraph parse_graph(std::string_view text);
std::string format_graph(const PlumbingGraph& g);

/// Diagonal: weight plus 2*sign per self-loop. Off-diagonal: sum of edge signs.
linalg::IntMatrix intersection_form(const PlumbingGraph& g);

/// H1 of the boundary 3-manifold: coker(Q), plus one free summand per cycle.
linalg::AbelianGroupDesc boundary_homology(const PlumbingGraph& g);

/// Hyperbolic words (sign +, all a_i >= 2, some a_j >= 3) give the n-cycle
/// with weights -a_i and all edges "+". The all-2 word with sign "-" gives
/// the negative parabolic all -2 cycle with one "-" edge.
PlumbingGraph cycle_plumbing_from_word(const sl2::MonodromyWord& w);

/// Negative parabolic cycles for -T^{+n} (weights -2) and -T^{-n} (weights +2), n >= 2.
PlumbingGraph parabolic_cycle(std::size_t n, int exponent_sign);

struct CycleMonodromy {
  sl2::SL2Element matrix;  // product of T^{w_i} S along the canonical walk
  int sign = +1;           // product of cycle edge signs

  sl2::SL2Element signed_matrix() const { return sign < 0 ? matrix.negated() : matrix; }
};
CycleMonodromy cycle_monodromy(const PlumbingGraph& g);

/// Identifies v1 in g1 with v2 in g2, summing weights. Colliding names from
/// g2 get a "_2" suffix; the merged vertex keeps v1's name.
PlumbingGraph join(const PlumbingGraph& g1, std::string_view v1, const PlumbingGraph& g2, std::string_view v2);

/// Identifies two distinct vertices of a tree, closing a cycle whose sign
/// product is `sign`. When the tree path has the other sign, v2 is
/// reoriented first (all of its edges flip).
PlumbingGraph self_join(const PlumbingGraph& g, std::string_view v1, std::string_view v2, int sign);

/// Removes a vertex and its incident edges.
PlumbingGraph remove_vertex(const PlumbingGraph& g, std::string_view v);

/// Join hypotheses on a distinguished vertex of a tree, checked at the level
/// of integral homology only.
struct JoinHypothesisReport {
  bool boundary_is_s1xs2 = false;   // H1(boundary) == Z
  bool complement_is_qs3 = false;   // boundary of g minus v has finite H1
  bool homology_level_only = true;  // sharp when g is a linear chain
};
JoinHypothesisReport check_join_hypotheses(const PlumbingGraph& g, std::string_view v);

/// Whether g is a path (a connected tree with all degrees <= 2).
bool is_linear(const PlumbingGraph& g);

/// Vertex-renamed canonical text: BFS from the smallest name, neighbors in
/// name order; e.g. "w=-2,-2,-2;e=0-1+,0-2-,1-2+".
std::string canonical_form(const PlumbingGraph& g);

}  // namespace qcirc::plumbing

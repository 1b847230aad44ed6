#include "qcirc/plumbing.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

#include "qcirc/error.hpp"

namespace qcirc::plumbing {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::size_t count_components(std::size_t n, const std::vector<Edge>& edges) {
  DisjointSets ds(n);
  std::size_t comps = n;
  for (const auto& e : edges) {
    if (ds.unite(e.u, e.v)) --comps;
  }
  return comps;
}

// Vertices on the cycle: what survives repeatedly pruning vertices of degree <= 1.
std::vector<bool> cycle_core(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    degree[e.u] += 1;
    degree[e.v] += 1;
  }
  std::vector<bool> alive(n, true);
  std::queue<std::size_t> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] <= 1) leaves.push(i);
  }
  while (!leaves.empty()) {
    const std::size_t x = leaves.front();
    leaves.pop();
    if (!alive[x]) continue;
    alive[x] = false;
    for (const auto& e : edges) {
      if (e.u == e.v) continue;
      std::size_t other;
      if (e.u == x) {
        other = e.v;
      } else if (e.v == x) {
        other = e.u;
      } else {
        continue;
      }
      if (alive[other] && --degree[other] == 1) leaves.push(other);
    }
  }
  return alive;
}

std::optional<CycleWalk> walk_cycle(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges) {
  const std::vector<bool> core = cycle_core(vertices.size(), edges);
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (core[i] && (!start || vertices[i].name < vertices[*start].name)) start = i;
  }
  if (!start) return std::nullopt;

  std::vector<std::size_t> core_edges;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (core[edges[k].u] && core[edges[k].v]) core_edges.push_back(k);
  }

  CycleWalk walk;
  const std::size_t s = *start;
  walk.vertices.push_back(s);

  auto other_end = [&](std::size_t k, std::size_t x) { return edges[k].u == x ? edges[k].v : edges[k].u; };

  // First step: toward the smaller-named neighbor; parallel edges by index.
  std::optional<std::size_t> first;
  for (std::size_t k : core_edges) {
    if (edges[k].u != s && edges[k].v != s) continue;
    if (!first) {
      first = k;
      continue;
    }
    const auto& cand = vertices[other_end(k, s)].name;
    const auto& best = vertices[other_end(*first, s)].name;
    if (cand < best) first = k;
  }
  walk.edges.push_back(*first);
  if (edges[*first].u == edges[*first].v) return walk;

  std::size_t prev_edge = *first;
  std::size_t current = other_end(*first, s);
  while (current != s) {
    walk.vertices.push_back(current);
    std::optional<std::size_t> next;
    for (std::size_t k : core_edges) {
      if (k == prev_edge) continue;
      if (edges[k].u == current || edges[k].v == current) {
        next = k;
        break;
      }
    }
    walk.edges.push_back(*next);
    prev_edge = *next;
    current = other_end(*next, current);
  }
  return walk;
}

void flip_vertex(std::vector<Edge>& edges, std::size_t x) {
  for (auto& e : edges) {
    if (e.u == e.v) continue;
    if (e.u == x || e.v == x) e.sign = -e.sign;
  }
}

void validate_name(const std::string& name) {
  if (name.empty()) throw Error(ErrorCode::parse_error, "empty vertex name");
  for (char ch : name) {
    if (ch == '#' || ch == ',' || ch == ':' || std::isspace(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::parse_error, "bad vertex name '" + name + "'");
    }
  }
}

std::string padded_name(std::size_t i, std::size_t n) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  return "v" + std::string(width - digits.size(), '0') + digits;
}

std::vector<std::vector<std::size_t>> adjacency(const PlumbingGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Sign product along the unique tree path between a and b.
int tree_path_sign(const PlumbingGraph& g, std::size_t a, std::size_t b) {
  std::vector<int> sign_to(g.size(), 0);
  sign_to[a] = 1;
  std::queue<std::size_t> q;
  q.push(a);
  while (!q.empty()) {
    const std::size_t x = q.front();
    q.pop();
    for (const auto& e : g.edges()) {
      std::size_t y;
      if (e.u == x) {
        y = e.v;
      } else if (e.v == x) {
        y = e.u;
      } else {
        continue;
      }
      if (sign_to[y] != 0) continue;
      sign_to[y] = sign_to[x] * e.sign;
      q.push(y);
    }
  }
  return sign_to[b];
}

}  // namespace

PlumbingGraph PlumbingGraph::build(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  std::map<std::string, std::size_t, std::less<>> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    validate_name(vertices[i].name);
    if (!seen.emplace(vertices[i].name, i).second) {
      throw Error(ErrorCode::duplicate_vertex, "duplicate vertex '" + vertices[i].name + "'");
    }
  }
  for (const auto& e : edges) {
    if (e.u >= vertices.size() || e.v >= vertices.size()) {
      throw Error(ErrorCode::dangling_edge, "edge references a missing vertex");
    }
    if (e.sign != 1 && e.sign != -1) throw Error(ErrorCode::parse_error, "edge sign must be +1 or -1");
  }
  const std::size_t comps = count_components(vertices.size(), edges);
  if (edges.size() + comps > vertices.size() + 1) {
    throw Error(ErrorCode::too_many_cycles, "graph has more than one independent cycle");
  }

  if (auto walk = walk_cycle(vertices, edges)) {
    for (std::size_t i = 0; i + 1 < walk->edges.size(); ++i) {
      if (edges[walk->edges[i]].sign < 0) flip_vertex(edges, walk->vertices[i + 1]);
    }
  }

  PlumbingGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

std::optional<std::size_t> PlumbingGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t PlumbingGraph::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::unknown_vertex, "no vertex named '" + std::string(name) + "'");
}

std::size_t PlumbingGraph::component_count() const { return count_components(vertices_.size(), edges_); }

std::size_t PlumbingGraph::cycle_count() const { return edges_.size() + component_count() - vertices_.size(); }

bool PlumbingGraph::is_cycle() const {
  if (cycle_count() != 1 || component_count() != 1) return false;
  return edges_.size() == vertices_.size();
}

std::optional<CycleWalk> PlumbingGraph::cycle_walk() const { return walk_cycle(vertices_, edges_); }

int PlumbingGraph::cycle_sign() const {
  int s = 1;
  if (auto walk = cycle_walk()) {
    for (std::size_t k : walk->edges) s *= edges_[k].sign;
  }
  return s;
}

PlumbingGraph parse_graph(std::string_view text) {
  std::vector<Vertex> vertices;
  std::vector<std::tuple<std::string, std::string, int, std::size_t>> raw_edges;
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
    if (tok[0] == "vertex") {
      if (tok.size() != 3) throw Error(ErrorCode::parse_error, where + "expected 'vertex <name> <weight>'");
      std::int64_t w = 0;
      std::string_view ws = tok[2];
      if (!ws.empty() && ws.front() == '+') ws.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(ws.data(), ws.data() + ws.size(), w);
      if (ws.empty() || ec != std::errc() || ptr != ws.data() + ws.size()) {
        throw Error(ErrorCode::parse_error, where + "bad weight '" + tok[2] + "'");
      }
      validate_name(tok[1]);
      vertices.push_back({tok[1], w});
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 || (tok[3] != "+" && tok[3] != "-")) {
        throw Error(ErrorCode::parse_error, where + "expected 'edge <a> <b> <+|->'");
      }
      raw_edges.emplace_back(tok[1], tok[2], tok[3] == "+" ? 1 : -1, lineno);
    } else {
      throw Error(ErrorCode::parse_error, where + "unknown directive '" + tok[0] + "'");
    }
  }

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i].name, i).second) {
      throw Error(ErrorCode::duplicate_vertex, "duplicate vertex '" + vertices[i].name + "'");
    }
  }
  std::vector<Edge> edges;
  for (const auto& [a, b, sign, ln] : raw_edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw Error(ErrorCode::dangling_edge,
                  "line " + std::to_string(ln) + ": edge references unknown vertex '" + (ia == index.end() ? a : b) + "'");
    }
    edges.push_back({ia->second, ib->second, sign});
  }
  return PlumbingGraph::build(std::move(vertices), std::move(edges));
}

std::string format_graph(const PlumbingGraph& g) {
  std::string out;
  for (const auto& v : g.vertices()) out += "vertex " + v.name + " " + std::to_string(v.weight) + "\n";
  for (const auto& e : g.edges()) {
    out += "edge " + g.vertices()[e.u].name + " " + g.vertices()[e.v].name + (e.sign > 0 ? " +\n" : " -\n");
  }
  return out;
}

linalg::IntMatrix intersection_form(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  linalg::IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) q(i, i) = static_cast<long>(g.vertices()[i].weight);
  for (const auto& e : g.edges()) {
    if (e.u == e.v) {
      q(e.u, e.u) += 2 * e.sign;
    } else {
      q(e.u, e.v) += e.sign;
      q(e.v, e.u) += e.sign;
    }
  }
  return q;
}

linalg::AbelianGroupDesc boundary_homology(const PlumbingGraph& g) {
  linalg::AbelianGroupDesc h = linalg::abelian_group_of(intersection_form(g));
  h.free_rank += g.cycle_count();
  return h;
}

PlumbingGraph cycle_plumbing_from_word(const sl2::MonodromyWord& w) {
  const auto& a = w.coeffs.entries;
  const bool all_at_least_two = !a.empty() && std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 2; });
  const bool some_three = std::any_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 3; });

  if (w.sign < 0 && all_at_least_two && !some_three) return parabolic_cycle(a.size(), +1);
  if (w.sign < 0 || !all_at_least_two || !some_three) {
    throw Error(ErrorCode::unsupported_word,
                "cycle plumbing needs a hyperbolic word (all >= 2, some >= 3) or the all-2 word with sign -");
  }

  const std::size_t n = a.size();
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back({padded_name(i, n), -a[i]});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, +1});
  return PlumbingGraph::build(std::move(vertices), std::move(edges));
}

PlumbingGraph parabolic_cycle(std::size_t n, int exponent_sign) {
  if (n < 2) throw Error(ErrorCode::unsupported_word, "parabolic cycle needs n >= 2");
  const std::int64_t weight = exponent_sign > 0 ? -2 : 2;
  // The -2 cycle needs sign product -1. Its orientation reverse, the +2
  // cycle, has sign product (-1)^(n+1) so the monodromy trace stays -2.
  const int product = exponent_sign > 0 ? -1 : (n % 2 == 0 ? -1 : 1);
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back({padded_name(i, n), weight});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, +1});
  edges.back().sign = product;
  return PlumbingGraph::build(std::move(vertices), std::move(edges));
}

CycleMonodromy cycle_monodromy(const PlumbingGraph& g) {
  if (!g.is_cycle()) throw Error(ErrorCode::not_cyclic, "cycle_monodromy: graph is not a single cycle");
  const CycleWalk walk = *g.cycle_walk();
  CycleMonodromy out;
  for (std::size_t v : walk.vertices) {
    out.matrix = out.matrix * sl2::chain_factor(sl2::Integer(static_cast<long>(g.vertices()[v].weight)));
  }
  for (std::size_t k : walk.edges) out.sign *= g.edges()[k].sign;
  return out;
}

PlumbingGraph join(const PlumbingGraph& g1, std::string_view v1, const PlumbingGraph& g2, std::string_view v2) {
  if (!g1.is_tree() || !g2.is_tree()) throw Error(ErrorCode::not_a_tree, "join: both inputs must be trees");
  const std::size_t i1 = g1.index_of(v1);
  const std::size_t i2 = g2.index_of(v2);

  std::vector<Vertex> vertices = g1.vertices();
  std::vector<Edge> edges = g1.edges();
  vertices[i1].weight += g2.vertices()[i2].weight;

  auto taken = [&](const std::string& name) {
    return std::any_of(vertices.begin(), vertices.end(), [&](const Vertex& v) { return v.name == name; });
  };
  std::vector<std::size_t> remap(g2.size());
  for (std::size_t j = 0; j < g2.size(); ++j) {
    if (j == i2) {
      remap[j] = i1;
      continue;
    }
    std::string name = g2.vertices()[j].name;
    while (taken(name)) name += "_2";
    remap[j] = vertices.size();
    vertices.push_back({name, g2.vertices()[j].weight});
  }
  for (const auto& e : g2.edges()) edges.push_back({remap[e.u], remap[e.v], e.sign});
  return PlumbingGraph::build(std::move(vertices), std::move(edges));
}

PlumbingGraph self_join(const PlumbingGraph& g, std::string_view v1, std::string_view v2, int sign) {
  if (!g.is_tree()) throw Error(ErrorCode::not_a_tree, "self_join: input must be a tree");
  const std::size_t a = g.index_of(v1);
  const std::size_t b = g.index_of(v2);
  if (a == b) throw Error(ErrorCode::same_vertex, "self_join: v1 and v2 must differ");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::parse_error, "self_join: sign must be +1 or -1");

  std::vector<Edge> edges = g.edges();
  if (tree_path_sign(g, a, b) != sign) flip_vertex(edges, b);

  std::vector<Vertex> vertices;
  std::vector<std::size_t> remap(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == b) continue;
    remap[i] = vertices.size();
    vertices.push_back(g.vertices()[i]);
  }
  remap[b] = remap[a];
  vertices[remap[a]].weight += g.vertices()[b].weight;
  for (auto& e : edges) {
    e.u = remap[e.u];
    e.v = remap[e.v];
  }
  return PlumbingGraph::build(std::move(vertices), std::move(edges));
}

PlumbingGraph remove_vertex(const PlumbingGraph& g, std::string_view v) {
  const std::size_t x = g.index_of(v);
  std::vector<Vertex> vertices;
  std::vector<std::size_t> remap(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == x) continue;
    remap[i] = vertices.size();
    vertices.push_back(g.vertices()[i]);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.u == x || e.v == x) continue;
    edges.push_back({remap[e.u], remap[e.v], e.sign});
  }
  return PlumbingGraph::build(std::move(vertices), std::move(edges));
}

JoinHypothesisReport check_join_hypotheses(const PlumbingGraph& g, std::string_view v) {
  if (!g.is_tree()) throw Error(ErrorCode::not_a_tree, "join hypotheses are stated for trees");
  JoinHypothesisReport r;
  r.boundary_is_s1xs2 = boundary_homology(g) == linalg::AbelianGroupDesc{1, {}};
  r.complement_is_qs3 = boundary_homology(remove_vertex(g, v)).free_rank == 0;
  r.homology_level_only = !is_linear(g);
  return r;
}

bool is_linear(const PlumbingGraph& g) {
  if (!g.is_tree()) return false;
  const auto adj = adjacency(g);
  return std::all_of(adj.begin(), adj.end(), [](const auto& nb) { return nb.size() <= 2; });
}

std::string canonical_form(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  const auto adj = adjacency(g);
  auto by_name = [&](std::size_t x, std::size_t y) { return g.vertices()[x].name < g.vertices()[y].name; };

  std::vector<std::size_t> order_by_name(n);
  std::iota(order_by_name.begin(), order_by_name.end(), std::size_t{0});
  std::sort(order_by_name.begin(), order_by_name.end(), by_name);

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::vector<std::size_t> visit;
  for (std::size_t root : order_by_name) {
    if (label[root] != unset) continue;
    std::queue<std::size_t> q;
    q.push(root);
    label[root] = visit.size();
    visit.push_back(root);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      std::vector<std::size_t> nb = adj[x];
      std::sort(nb.begin(), nb.end(), by_name);
      for (std::size_t y : nb) {
        if (label[y] != unset) continue;
        label[y] = visit.size();
        visit.push_back(y);
        q.push(y);
      }
    }
  }

  std::string out = "w=";
  for (std::size_t i = 0; i < visit.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.vertices()[visit[i]].weight);
  }
  std::vector<std::tuple<std::size_t, std::size_t, int>> es;
  for (const auto& e : g.edges()) {
    es.emplace_back(std::min(label[e.u], label[e.v]), std::max(label[e.u], label[e.v]), e.sign);
  }
  std::sort(es.begin(), es.end());
  out += ";e=";
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ',';
    const auto& [x, y, s] = es[i];
    out += std::to_string(x) + "-" + std::to_string(y) + (s > 0 ? "+" : "-");
  }
  return out;
}

}  // namespace qcirc::plumbing

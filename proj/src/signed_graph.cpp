#include "goeritz/signed_graph.hpp"

#include "goeritz/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace goeritz {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

void check_edge_id(const SignedMultigraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) {
    throw Error(ErrorKind::BadEdge, "edge " + std::to_string(e) + " does not exist (graph has " +
                                        std::to_string(g.edge_count()) + " edges)");
  }
}

}  // namespace

SignedMultigraph::SignedMultigraph(int vertex_count, std::vector<SignedEdge> edges,
                                   std::optional<Rotation> rotation)
    : n_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  if (n_ < 0) throw Error(ErrorKind::BadInput, "negative vertex count");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_) {
      throw Error(ErrorKind::BadEdge, "edge " + std::to_string(e) + " has an endpoint outside 0.." +
                                          std::to_string(n_ - 1));
    }
    if (ed.sign != 1 && ed.sign != -1) {
      throw Error(ErrorKind::BadEdge, "edge " + std::to_string(e) + " has sign " +
                                          std::to_string(ed.sign) + ", expected +1 or -1");
    }
  }
  if (!rotation_) return;
  if (static_cast<int>(rotation_->size()) != n_) {
    throw Error(ErrorKind::BadInput, "rotation must list every vertex");
  }
  std::vector<int> seen(2 * edges_.size(), 0);
  for (int v = 0; v < n_; ++v) {
    for (int h : (*rotation_)[v]) {
      if (h < 0 || h >= static_cast<int>(seen.size())) {
        throw Error(ErrorKind::BadInput, "rotation names unknown half-edge " + std::to_string(h));
      }
      const auto& ed = edges_[edge_of(h)];
      if ((end_of(h) == 0 ? ed.u : ed.v) != v) {
        throw Error(ErrorKind::BadInput, "half-edge " + std::to_string(h) + " listed at vertex " +
                                             std::to_string(v) + " but belongs elsewhere");
      }
      if (seen[h]++) {
        throw Error(ErrorKind::BadInput, "half-edge " + std::to_string(h) + " listed twice");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorKind::BadInput, "rotation omits a half-edge");
  }
}

const SignedEdge& SignedMultigraph::edge(int e) const {
  check_edge_id(*this, e);
  return edges_[e];
}

std::vector<int> SignedMultigraph::component_labels() const {
  UnionFind uf(n_);
  for (const auto& e : edges_) uf.unite(e.u, e.v);
  std::vector<int> label(n_, -1);
  std::vector<int> by_root(n_, -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    const int r = uf.find(v);
    if (by_root[r] < 0) by_root[r] = next++;
    label[v] = by_root[r];
  }
  return label;
}

int SignedMultigraph::component_count() const {
  const auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

Rotation SignedMultigraph::default_rotation() const {
  Rotation rot(n_);
  for (int e = 0; e < edge_count(); ++e) {
    rot[edges_[e].u].push_back(half_edge(e, 0));
    rot[edges_[e].v].push_back(half_edge(e, 1));
  }
  return rot;
}

std::vector<EdgeClass> classify_edges(const SignedMultigraph& g) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<EdgeClass> out(edges.size(), EdgeClass::Ordinary);
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (edges[e].is_loop()) {
      out[e] = EdgeClass::Loop;
      continue;
    }
    adj[edges[e].u].push_back({edges[e].v, e});
    adj[edges[e].v].push_back({edges[e].u, e});
  }
  // Iterative lowpoint search; skipping by edge id keeps parallel edges apart.
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int v, via, next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < static_cast<int>(adj[f.v].size())) {
        const auto [w, e] = adj[f.v][f.next++];
        if (e == f.via) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const int parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) out[done.via] = EdgeClass::Bridge;
      }
    }
  }
  return out;
}

EdgeClass classify_edge(const SignedMultigraph& g, int e) {
  check_edge_id(g, e);
  const auto& ed = g.edges()[e];
  if (ed.is_loop()) return EdgeClass::Loop;
  UnionFind uf(g.vertex_count());
  for (int f = 0; f < g.edge_count(); ++f) {
    if (f != e) uf.unite(g.edges()[f].u, g.edges()[f].v);
  }
  return uf.find(ed.u) == uf.find(ed.v) ? EdgeClass::Ordinary : EdgeClass::Bridge;
}

SignedMultigraph minor(const SignedMultigraph& g, int e, MinorMode mode) {
  check_edge_id(g, e);
  const auto& target = g.edges()[e];
  std::vector<SignedEdge> kept;
  kept.reserve(g.edges().size());
  if (mode == MinorMode::Delete) {
    for (int f = 0; f < g.edge_count(); ++f) {
      if (f != e) kept.push_back(g.edges()[f]);
    }
    return SignedMultigraph(g.vertex_count(), std::move(kept));
  }
  if (target.is_loop()) {
    throw Error(ErrorKind::ContractLoop, "edge " + std::to_string(e) + " is a loop; delete it instead");
  }
  const int keep = std::min(target.u, target.v);
  const int gone = std::max(target.u, target.v);
  auto relabel = [&](int x) { return x == gone ? keep : (x > gone ? x - 1 : x); };
  for (int f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    const auto& ed = g.edges()[f];
    kept.push_back({relabel(ed.u), relabel(ed.v), ed.sign});
  }
  return SignedMultigraph(g.vertex_count() - 1, std::move(kept));
}

SymmetricIntMatrix goeritz_from_graph(const SignedMultigraph& g, int base) {
  if (base < 0 || base >= g.vertex_count()) {
    throw Error(ErrorKind::BadInput, "base vertex " + std::to_string(base) + " does not exist");
  }
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  auto row = [base](int v) { return static_cast<std::size_t>(v < base ? v : v - 1); };
  SymmetricIntMatrix out(static_cast<std::size_t>(g.vertex_count() - 1));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u != base) out.set(row(e.u), row(e.u), out(row(e.u), row(e.u)) - e.sign);
    if (e.v != base) out.set(row(e.v), row(e.v), out(row(e.v), row(e.v)) - e.sign);
    if (e.u != base && e.v != base) out.set(row(e.u), row(e.v), out(row(e.u), row(e.v)) + e.sign);
  }
  return out;
}

SignedMultigraph graph_from_matrix(const SymmetricIntMatrix& g) {
  const int m = static_cast<int>(g.dim());
  // weight(a, b) for vertices 0..m, with vertex 0 standing for the base.
  auto weight = [&](int a, int b) -> SymmetricIntMatrix::Entry {
    if (a == 0) {
      SymmetricIntMatrix::Entry s = 0;
      for (int k = 0; k < m; ++k) s -= g(k, b - 1);
      return s;
    }
    return g(a - 1, b - 1);
  };
  std::vector<SignedEdge> edges;
  UnionFind uf(m + 1);
  for (int a = 0; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      const auto w = weight(a, b);
      const int sign = w > 0 ? 1 : -1;
      for (SymmetricIntMatrix::Entry k = 0; k < (w < 0 ? -w : w); ++k) edges.push_back({a, b, sign});
      if (w != 0) uf.unite(a, b);
    }
  }
  for (int a = 0; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      if (weight(a, b) == 0 && uf.unite(a, b)) {
        edges.push_back({a, b, 1});
        edges.push_back({a, b, -1});
      }
    }
  }
  SignedMultigraph bare(m + 1, edges);
  return SignedMultigraph(m + 1, std::move(edges), bare.default_rotation());
}

ColoopSigns coloop_signs(const SignedMultigraph& g) {
  ColoopSigns out;
  for (const auto& e : g.edges()) {
    if (!e.is_loop()) continue;
    (e.sign < 0 ? out.plus : out.minus) += 1;
  }
  return out;
}

SignedMultigraph disjoint_union(const SignedMultigraph& g, const SignedMultigraph& h) {
  std::vector<SignedEdge> edges = g.edges();
  const int shift = g.vertex_count();
  for (const auto& e : h.edges()) edges.push_back({e.u + shift, e.v + shift, e.sign});
  return SignedMultigraph(shift + h.vertex_count(), std::move(edges));
}

}  // namespace goeritz

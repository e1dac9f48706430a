#include "goeritz/tau.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace goeritz {

namespace {

using Key = std::vector<int>;  // [n, u0, v0, s0, u1, v1, s1, ...] with u <= v, sorted

Key normalized(int n, std::vector<std::array<int, 3>> edges) {
  for (auto& e : edges) {
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  std::sort(edges.begin(), edges.end());
  Key key{n};
  key.reserve(1 + 3 * edges.size());
  for (const auto& e : edges) key.insert(key.end(), e.begin(), e.end());
  return key;
}

std::vector<SignedMultigraph> components(const SignedMultigraph& g) {
  const auto label = g.component_labels();
  const int k = g.component_count();
  std::vector<int> local(g.vertex_count());
  std::vector<int> sizes(k, 0);
  for (int v = 0; v < g.vertex_count(); ++v) local[v] = sizes[label[v]]++;
  std::vector<std::vector<SignedEdge>> edges(k);
  for (const auto& e : g.edges()) edges[label[e.u]].push_back({local[e.u], local[e.v], e.sign});
  std::vector<SignedMultigraph> out;
  for (int c = 0; c < k; ++c) out.emplace_back(sizes[c], std::move(edges[c]));
  return out;
}

// Renumbers vertex classes 0, 1, ... in order of their smallest member.
std::vector<int> compact_labels(const std::vector<int>& root) {
  std::vector<int> id(root.size(), -1);
  std::vector<int> out(root.size());
  int next = 0;
  for (std::size_t v = 0; v < root.size(); ++v) {
    if (id[root[v]] < 0) id[root[v]] = next++;
    out[v] = id[root[v]];
  }
  return out;
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::size_t TauEvaluator::KeyHash::operator()(const Key& key) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : key) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

LaurentPoly TauEvaluator::connected(Key key) {
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const int n = key[0];
  std::vector<SignedEdge> edges;
  LaurentPoly factor(1);
  for (std::size_t p = 1; p < key.size(); p += 3) {
    const SignedEdge e{key[p], key[p + 1], key[p + 2]};
    if (e.is_loop()) {
      factor *= neg_A_pow(3 * e.sign);
    } else {
      edges.push_back(e);
    }
  }

  const SignedMultigraph stripped(n, edges);
  const auto cls = classify_edges(stripped);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (cls[e] != EdgeClass::Bridge) continue;
    factor *= neg_A_pow(-3 * edges[e].sign);
    const int a = find(parent, edges[e].u), b = find(parent, edges[e].v);
    parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> root(n);
  for (int v = 0; v < n; ++v) root[v] = find(parent, v);
  const auto label = compact_labels(root);
  const int merged_n = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::array<int, 3>> rest;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (cls[e] != EdgeClass::Bridge) rest.push_back({label[edges[e].u], label[edges[e].v], edges[e].sign});
  }

  LaurentPoly result = factor;
  if (!rest.empty()) {
    Key core = normalized(merged_n, rest);
    const int u = core[1], v = core[2], s = core[3];
    // Deleting an ordinary edge keeps the graph connected.
    std::vector<std::array<int, 3>> deleted;
    std::vector<std::array<int, 3>> contracted;
    for (std::size_t p = 4; p < core.size(); p += 3) {
      deleted.push_back({core[p], core[p + 1], core[p + 2]});
      auto relabel = [&](int x) { return x == v ? u : (x > v ? x - 1 : x); };
      contracted.push_back({relabel(core[p]), relabel(core[p + 1]), core[p + 2]});
    }
    const LaurentPoly c = connected(normalized(merged_n - 1, std::move(contracted)));
    const LaurentPoly d = connected(normalized(merged_n, std::move(deleted)));
    result *= A_pow(s) * c + A_pow(-s) * d;
  }
  memo_.emplace(std::move(key), result);
  return result;
}

LaurentPoly TauEvaluator::operator()(const SignedMultigraph& g) {
  const auto parts = components(g);
  LaurentPoly result(1);
  for (std::size_t c = 0; c < parts.size(); ++c) {
    if (c > 0) result *= loop_value();
    std::vector<std::array<int, 3>> edges;
    for (const auto& e : parts[c].edges()) edges.push_back({e.u, e.v, e.sign});
    result *= connected(normalized(parts[c].vertex_count(), std::move(edges)));
  }
  return result;
}

LaurentPoly tau(const SignedMultigraph& g) {
  TauEvaluator eval;
  return eval(g);
}

LaurentPoly tau_with_order(const SignedMultigraph& g, const EdgeChooser& choose) {
  if (g.component_count() > 1) {
    const auto parts = components(g);
    LaurentPoly result(1);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      if (c > 0) result *= loop_value();
      result *= tau_with_order(parts[c], choose);
    }
    return result;
  }
  if (g.edge_count() == 0) return LaurentPoly(1);
  const int e = static_cast<int>(choose(g.edges()));
  const int s = g.edge(e).sign;
  switch (classify_edge(g, e)) {
    case EdgeClass::Loop:
      return neg_A_pow(3 * s) * tau_with_order(minor(g, e, MinorMode::Delete), choose);
    case EdgeClass::Bridge:
      return neg_A_pow(-3 * s) * tau_with_order(minor(g, e, MinorMode::Contract), choose);
    case EdgeClass::Ordinary:
      break;
  }
  return A_pow(s) * tau_with_order(minor(g, e, MinorMode::Contract), choose) +
         A_pow(-s) * tau_with_order(minor(g, e, MinorMode::Delete), choose);
}

}  // namespace goeritz

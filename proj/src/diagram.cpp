#include "goeritz/diagram.hpp"

#include "goeritz/cyclotomic.hpp"
#include "goeritz/error.hpp"
#include "goeritz/tau.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace goeritz {

namespace {

constexpr int kMaxStateSumCrossings = 30;

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a == b) return false;
  parent[std::max(a, b)] = std::min(a, b);
  return true;
}

Slot opposite_slot(Slot s) { return {s.crossing, (s.index + 2) % 4}; }

std::string slot_name(Slot s) {
  return "crossing " + std::to_string(s.crossing) + " slot " + std::to_string(s.index);
}

struct Step {
  int arc;
  Slot tail;
  Slot head;
};

}  // namespace

Diagram Diagram::from_pd(PDCode pd) {
  Diagram d;
  d.pd_ = std::move(pd);
  const int n = d.crossing_count();
  if (n == 0) throw Error(ErrorKind::BadArcLabels, "diagram has no crossings");
  const int arcs = 2 * n;

  std::vector<std::vector<Slot>> seen(arcs);
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < 4; ++k) {
      const int label = d.pd_[c][k];
      if (label < 1 || label > arcs) {
        throw Error(ErrorKind::BadArcLabels, "arc label " + std::to_string(label) + " outside 1.." +
                                                 std::to_string(arcs));
      }
      seen[label - 1].push_back({c, k});
    }
  }
  d.occurrences_.resize(arcs);
  for (int a = 0; a < arcs; ++a) {
    if (seen[a].size() != 2) {
      throw Error(ErrorKind::BadArcLabels, "arc " + std::to_string(a + 1) + " appears " +
                                               std::to_string(seen[a].size()) + " times, expected 2");
    }
    d.occurrences_[a] = {seen[a][0], seen[a][1]};
  }

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  int pieces = n;
  for (const auto& occ : d.occurrences_) pieces -= unite(parent, occ[0].crossing, occ[1].crossing);
  if (pieces > 1) throw Error(ErrorKind::SplitDiagram, "diagram has " + std::to_string(pieces) + " pieces");

  d.ends_.resize(arcs);
  std::vector<bool> visited(arcs, false);
  for (int lo = 1; lo <= arcs; ++lo) {
    if (visited[lo - 1]) continue;
    std::vector<Step> trace;
    const Slot start = d.occurrences_[lo - 1][0];
    Slot tail = start;
    do {
      const Slot head = d.partner(tail);
      trace.push_back({d.arc_at(tail), tail, head});
      tail = opposite_slot(head);
    } while (tail != start);
    const int m = static_cast<int>(trace.size());
    for (const auto& st : trace) {
      if (st.arc < lo || st.arc >= lo + m || visited[st.arc - 1]) {
        throw Error(ErrorKind::BadNumbering, "arcs of the component containing arc " + std::to_string(lo) +
                                                 " are not numbered consecutively");
      }
      visited[st.arc - 1] = true;
    }

    // Passage i runs from trace[i] into trace[i+1] through trace[i].head.
    bool forward = true;
    if (m >= 3) {
      forward = trace[1].arc == lo + 1;
    } else {
      int vote = 0;
      for (const auto& st : trace) {
        if (st.head.index % 2 == 0) vote = st.head.index == 0 ? 1 : -1;
      }
      if (vote != 0) {
        forward = vote > 0;
      } else if (m == 1) {
        forward = trace[0].head.index == 3;
      } else {
        // Two arcs, both passages over: the passage at the lowest crossing goes lo -> lo+1.
        const int first = trace[0].head.crossing <= trace[1].head.crossing ? 0 : 1;
        forward = trace[first].arc == lo;
      }
    }
    if (!forward) {
      std::reverse(trace.begin(), trace.end());
      for (auto& st : trace) std::swap(st.tail, st.head);
      std::rotate(trace.begin(), trace.end() - 1, trace.end());
    }
    std::vector<int> order;
    for (int i = 0; i < m; ++i) {
      if (trace[i].arc != lo + i) {
        throw Error(ErrorKind::BadNumbering, "arc labels do not increase along the component containing arc " +
                                                 std::to_string(lo));
      }
      if (trace[i].head.index % 2 == 0 && trace[i].head.index != 0) {
        throw Error(ErrorKind::BadNumbering, "the numbering makes the under-strand enter at " +
                                                 slot_name(trace[i].head) + " instead of slot 0");
      }
      d.ends_[trace[i].arc - 1] = {trace[i].tail, trace[i].head};
      order.push_back(trace[i].arc);
    }
    d.components_.push_back(std::move(order));
  }
  return d;
}

Slot Diagram::partner(Slot s) const {
  const auto& occ = occurrences_[arc_at(s) - 1];
  return occ[0] == s ? occ[1] : occ[0];
}

int Diagram::over_incoming(int c) const { return incoming({c, 1}) ? 1 : 3; }

FaceStructure faces_and_genus(const Diagram& d) {
  const int n = d.crossing_count();
  std::vector<std::array<int, 4>> raw(n, {-1, -1, -1, -1});
  std::vector<std::vector<Corner>> found;
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < 4; ++i) {
      if (raw[c][i] >= 0) continue;
      const int id = static_cast<int>(found.size());
      found.emplace_back();
      Corner cur{c, i};
      while (raw[cur.crossing][cur.index] < 0) {
        raw[cur.crossing][cur.index] = id;
        found[id].push_back(cur);
        cur = d.partner({cur.crossing, (cur.index + 1) % 4});
      }
    }
  }

  // Sort key: smallest bordering arc, then whether the face lies left of it.
  const int f = static_cast<int>(found.size());
  std::vector<std::pair<int, int>> key(f);
  for (int id = 0; id < f; ++id) {
    int smallest = d.arc_count() + 1;
    for (const auto& cn : found[id]) {
      smallest = std::min({smallest, d.arc_at(cn), d.arc_at({cn.crossing, (cn.index + 1) % 4})});
    }
    const Slot h = d.head(smallest);
    const bool left = raw[h.crossing][(h.index + 3) % 4] == id;
    key[id] = {smallest, left ? 0 : 1};
  }
  std::vector<int> order(f);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<int> rank(f);
  for (int r = 0; r < f; ++r) rank[order[r]] = r;

  FaceStructure out;
  out.faces.resize(f);
  for (int id = 0; id < f; ++id) out.faces[rank[id]] = std::move(found[id]);
  out.face_of_corner = raw;
  for (auto& row : out.face_of_corner) {
    for (auto& v : row) v = rank[v];
  }
  out.genus = (2 - (f - n)) / 2;
  return out;
}

std::vector<int> Shading::black_faces() const {
  std::vector<int> out;
  for (int id = 0; id < faces.face_count(); ++id) {
    if (black[id]) out.push_back(id);
  }
  return out;
}

std::vector<int> Shading::white_faces() const {
  std::vector<int> out;
  for (int id = 0; id < faces.face_count(); ++id) {
    if (!black[id]) out.push_back(id);
  }
  return out;
}

Shading Shading::opposite() const {
  Shading out = *this;
  out.index = 1 - index;
  out.black.flip();
  return out;
}

std::pair<Shading, Shading> checkerboard(const Diagram& d) {
  FaceStructure faces = faces_and_genus(d);
  const int f = faces.face_count();
  std::vector<std::vector<int>> adj(f);
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (int i = 0; i < 4; ++i) {
      const int a = faces.face_at({c, i});
      const int b = faces.face_at({c, (i + 1) % 4});
      if (a == b) {
        throw Error(ErrorKind::NotCheckerboardColorable,
                    "face " + std::to_string(a) + " lies on both sides of arc " +
                        std::to_string(d.arc_at({c, (i + 1) % 4})));
      }
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  const Slot h = d.head(1);
  const int first_white = faces.face_at({h.crossing, (h.index + 3) % 4});
  std::vector<int> color(f, -1);
  color[first_white] = 0;
  std::queue<int> todo;
  todo.push(first_white);
  while (!todo.empty()) {
    const int a = todo.front();
    todo.pop();
    for (int b : adj[a]) {
      if (color[b] < 0) {
        color[b] = 1 - color[a];
        todo.push(b);
      } else if (color[b] == color[a]) {
        throw Error(ErrorKind::NotCheckerboardColorable, "face adjacency graph has an odd cycle");
      }
    }
  }
  Shading s0;
  s0.index = 0;
  s0.black.resize(f);
  for (int id = 0; id < f; ++id) s0.black[id] = color[id] == 1;
  s0.faces = std::move(faces);
  Shading s1 = s0.opposite();
  return {std::move(s0), std::move(s1)};
}

Shading shading(const Diagram& d, int index) {
  if (index != 0 && index != 1) {
    throw Error(ErrorKind::BadInput, "shading index must be 0 or 1, got " + std::to_string(index));
  }
  auto both = checkerboard(d);
  return index == 0 ? std::move(both.first) : std::move(both.second);
}

int checkerboard_sign(const Shading& s, int c) { return s.is_black({c, 1}) ? 1 : -1; }

TaitGraph tait_graph(const Diagram& d, const Shading& s) {
  TaitGraph out;
  out.vertex_face = s.black_faces();
  std::vector<int> vertex_of(s.faces.face_count(), -1);
  for (std::size_t k = 0; k < out.vertex_face.size(); ++k) vertex_of[out.vertex_face[k]] = static_cast<int>(k);

  std::vector<SignedEdge> edges;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int sigma = checkerboard_sign(s, c);
    const int low = sigma > 0 ? 1 : 0;
    edges.push_back({vertex_of[s.faces.face_at({c, low})], vertex_of[s.faces.face_at({c, low + 2})], sigma});
  }
  // Faces are traversed clockwise, so the counterclockwise rotation reverses them.
  Rotation rot(out.vertex_face.size());
  for (std::size_t k = 0; k < out.vertex_face.size(); ++k) {
    const auto& boundary = s.faces.faces[out.vertex_face[k]];
    for (auto it = boundary.rbegin(); it != boundary.rend(); ++it) {
      const int low = checkerboard_sign(s, it->crossing) > 0 ? 1 : 0;
      rot[k].push_back(half_edge(it->crossing, it->index == low ? 0 : 1));
    }
  }
  out.graph = SignedMultigraph(static_cast<int>(out.vertex_face.size()), std::move(edges), std::move(rot));
  return out;
}

int default_base_face(const Diagram& d, const Shading& s) {
  const Slot h = d.head(1);
  const int left = s.faces.face_at({h.crossing, (h.index + 3) % 4});
  return s.black[left] ? s.faces.face_at(h) : left;
}

GoeritzMatrix goeritz_from_diagram(const Diagram& d, const Shading& s, int base_face) {
  if (base_face < 0 || base_face >= s.faces.face_count() || s.black[base_face]) {
    throw Error(ErrorKind::BadRegion, "face " + std::to_string(base_face) + " is not a white region");
  }
  const auto white = s.white_faces();
  std::vector<int> slot(s.faces.face_count(), -1);
  for (std::size_t k = 0; k < white.size(); ++k) slot[white[k]] = static_cast<int>(k);

  SymmetricIntMatrix full(white.size());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int sigma = checkerboard_sign(s, c);
    const int low = sigma > 0 ? 0 : 1;
    const int a = slot[s.faces.face_at({c, low})];
    const int b = slot[s.faces.face_at({c, low + 2})];
    if (a == b) continue;
    full.set(a, b, full(a, b) - sigma);
  }
  for (std::size_t i = 0; i < white.size(); ++i) {
    SymmetricIntMatrix::Entry row = 0;
    for (std::size_t k = 0; k < white.size(); ++k) {
      if (k != i) row += full(i, k);
    }
    full.set(i, i, -row);
  }
  GoeritzMatrix out;
  out.base_face = base_face;
  out.matrix = delete_row_col(full, static_cast<std::size_t>(slot[base_face]));
  for (int face : white) {
    if (face != base_face) out.region_faces.push_back(face);
  }
  return out;
}

GoeritzMatrix goeritz_from_diagram(const Diagram& d, const Shading& s) {
  return goeritz_from_diagram(d, s, default_base_face(d, s));
}

WritheData writhe_data(const Diagram& d, const Shading& s) {
  WritheData out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int eps = d.writhe_sign(c);
    const int low = checkerboard_sign(s, c) > 0 ? 0 : 1;
    const bool nugatory = s.faces.face_at({c, low}) == s.faces.face_at({c, low + 2});
    out.epsilon.push_back(eps);
    out.nugatory.push_back(nugatory);
    out.w += eps;
    if (nugatory) out.w0 += eps;
  }
  return out;
}

CrossingTypes crossing_types_and_euler(const Diagram& d, const Shading& s) {
  CrossingTypes out;
  std::int64_t type_two_sum = 0;
  for (int c = 0; c < d.crossing_count(); ++c) {
    // The under-strand leaves through slot 2; the over-strand through 1 or 3.
    const Corner between{c, d.writhe_sign(c) > 0 ? 1 : 2};
    if (s.is_black(between)) {
      out.types.push_back(CrossingType::II);
      type_two_sum += checkerboard_sign(s, c);
    } else {
      out.types.push_back(CrossingType::I);
    }
  }
  // Gordon-Litherland's crossing sign is -σ, so e = -2Σ(-σ) over type II.
  out.euler.value = 2 * type_two_sum;
  return out;
}

LaurentPoly bracket_state_sum(const Diagram& d) {
  if (faces_and_genus(d).genus > 0) {
    throw Error(ErrorKind::PositiveGenus, "the planar state sum needs a genus-0 diagram");
  }
  const int n = d.crossing_count();
  if (n > kMaxStateSumCrossings) {
    throw Error(ErrorKind::TooManyCrossings, std::to_string(n) + " crossings is too many for the state sum");
  }
  const int arcs = d.arc_count();
  std::map<std::pair<int, int>, long long> tally;  // (a - b, loops) -> states
  std::vector<int> parent(arcs);
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = arcs;
    int balance = 0;
    for (int c = 0; c < n; ++c) {
      const auto& x = d.pd()[c];
      if ((state >> c) & 1) {
        loops -= unite(parent, x[0] - 1, x[3] - 1);
        loops -= unite(parent, x[1] - 1, x[2] - 1);
        --balance;
      } else {
        loops -= unite(parent, x[0] - 1, x[1] - 1);
        loops -= unite(parent, x[2] - 1, x[3] - 1);
        ++balance;
      }
    }
    ++tally[{balance, loops}];
  }
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  LaurentPoly result;
  for (const auto& [k, count] : tally) {
    while (static_cast<int>(delta_pow.size()) < k.second) delta_pow.push_back(delta_pow.back() * loop_value());
    result += BigInt(count) * (A_pow(k.first) * delta_pow[k.second - 1]);
  }
  return result;
}

namespace {

int total_writhe(const Diagram& d) {
  int w = 0;
  for (int c = 0; c < d.crossing_count(); ++c) w += d.writhe_sign(c);
  return w;
}

}  // namespace

HalfTLaurent jones(const Diagram& d) {
  return substitute_half_t(neg_A_pow(-3 * total_writhe(d)) * bracket_state_sum(d));
}

HalfTLaurent nu(const Diagram& d, const Shading& s) {
  return substitute_half_t(neg_A_pow(-3 * total_writhe(d)) * tau(tait_graph(d, s).graph));
}

DeterminantSet determinant_set(const Diagram& d) {
  const auto [s0, s1] = checkerboard(d);
  DeterminantSet out;
  out.det_g = abs(determinant(goeritz_from_diagram(d, s0).matrix));
  out.det_g_prime = abs(determinant(goeritz_from_diagram(d, s1).matrix));
  out.nu_abs = abs_at_minus_one(nu(d, s0));
  out.nu_abs_prime = abs_at_minus_one(nu(d, s1));
  return out;
}

}  // namespace goeritz

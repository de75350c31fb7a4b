#include "nervecheck/planarity.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace nervecheck {

const char* to_string(PlanarityCertificate::Obstruction o) {
  using O = PlanarityCertificate::Obstruction;
  switch (o) {
    case O::None: return "None";
    case O::Dim3Plus: return "Dim3Plus";
    case O::EdgeInThreeTriangles: return "EdgeInThreeTriangles";
    case O::NonplanarGraph: return "NonplanarGraph";
    case O::NoFaceAssignment: return "NoFaceAssignment";
    case O::IsWholeSphere: return "IsWholeSphere";
  }
  return "?";
}

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Skeleton data shared by the planarity routines.
struct Skeleton {
  int n = 0;
  std::vector<std::vector<int>> adj;    // sorted neighbor lists
  std::vector<Subset> triangles;        // 2-simplices as masks
  std::map<Subset, int> edge_triangles; // edge mask -> triangle count

  explicit Skeleton(const LabelledComplex& k) : n(k.vertex_count()), adj(n) {
    const auto& by_dim = k.masks_by_dim();
    if (by_dim.size() >= 2)
      for (Subset e : by_dim[1]) {
        const int u = std::countr_zero(e);
        const int v = std::countr_zero(e & (e - 1));
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    if (by_dim.size() >= 3)
      for (Subset t : by_dim[2]) {
        triangles.push_back(t);
        for (Subset rest = t; rest;) {
          const Subset bit = rest & (~rest + 1);
          rest &= rest - 1;
          edge_triangles[t & ~bit] += 1;
        }
      }
  }
};

bool boost_planar(int n, const std::vector<std::pair<int, int>>& edges,
                  std::vector<std::vector<int>>* rotation_out = nullptr) {
  if (edges.empty()) {
    if (rotation_out) rotation_out->assign(n, {});
    return true;
  }
  BoostGraph g(n);
  for (auto [u, v] : edges) boost::add_edge(u, v, g);
  std::vector<std::vector<BoostEdge>> storage(n);
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = g,
      boost::boyer_myrvold_params::embedding = storage.data());
  if (planar && rotation_out) {
    rotation_out->assign(n, {});
    for (int v = 0; v < n; ++v)
      for (const BoostEdge& e : storage[v]) {
        const int s = static_cast<int>(boost::source(e, g));
        const int t = static_cast<int>(boost::target(e, g));
        (*rotation_out)[v].push_back(s == v ? t : s);
      }
  }
  return planar;
}

// Traces the face orbits of a rotation system. The dart following (u, v)
// is (v, w) where w succeeds u in the rotation at v.
struct FaceTrace {
  int face_count = 0;
  std::vector<std::vector<int>> walks;  // vertex walks, one per face
};

FaceTrace trace_faces(const std::vector<std::vector<int>>& rotation) {
  const int n = static_cast<int>(rotation.size());
  std::vector<std::map<int, int>> position(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i)
      position[v][rotation[v][i]] = i;

  FaceTrace trace;
  std::set<std::pair<int, int>> visited;
  for (int u = 0; u < n; ++u)
    for (int v : rotation[u]) {
      if (visited.count({u, v})) continue;
      std::vector<int> walk;
      int a = u, b = v;
      while (visited.insert({a, b}).second) {
        walk.push_back(a);
        const auto& rot = rotation[b];
        const int next = rot[(position[b].at(a) + 1) % rot.size()];
        a = b;
        b = next;
      }
      trace.walks.push_back(std::move(walk));
      ++trace.face_count;
    }
  return trace;
}

// One vertex's rotation constraints: the link edges coming from triangles
// force consecutive neighbors, so the rotation is a cyclic arrangement of
// items (paths of the link graph plus free neighbors); a link cycle must
// be the entire rotation.
struct VertexItems {
  bool valid = true;
  bool forced_cycle = false;
  std::vector<std::vector<int>> items;  // neighbor sequences
};

VertexItems build_vertex_items(const Skeleton& sk, int v) {
  VertexItems out;
  const auto& nbrs = sk.adj[v];
  std::map<int, std::vector<int>> link;  // link vertex -> link neighbors
  for (Subset t : sk.triangles) {
    if (!(t >> v & 1)) continue;
    const Subset rest = t & ~(Subset{1} << v);
    const int a = std::countr_zero(rest);
    const int b = std::countr_zero(rest & (rest - 1));
    link[a].push_back(b);
    link[b].push_back(a);
  }
  for (const auto& [u, around] : link)
    if (around.size() > 2) {  // an edge through v in three triangles
      out.valid = false;
      return out;
    }

  std::set<int> placed;
  auto walk_from = [&](int start, int forbidden_step) {
    std::vector<int> sequence;
    int prev = forbidden_step, cur = start;
    for (;;) {
      sequence.push_back(cur);
      placed.insert(cur);
      int next = -1;
      for (int w : link.at(cur))
        if (w != prev && !placed.count(w)) next = w;
      if (next == -1) break;
      prev = cur;
      cur = next;
    }
    return sequence;
  };

  // Path components first (start at a degree-<=1 link vertex)...
  for (const auto& [u, around] : link)
    if (around.size() <= 1 && !placed.count(u))
      out.items.push_back(walk_from(u, -1));
  // ...then whatever is left consists of cycles.
  bool saw_cycle = false;
  for (const auto& [u, around] : link)
    if (!placed.count(u)) {
      out.items.push_back(walk_from(u, -1));
      saw_cycle = true;
    }

  if (saw_cycle) {
    // A link cycle is the entire rotation at v: it must be the only item
    // and must cover every neighbor.
    if (out.items.size() != 1 || out.items[0].size() != nbrs.size()) {
      out.valid = false;
      return out;
    }
    out.forced_cycle = true;
    return out;
  }
  for (int u : nbrs)
    if (!link.count(u)) out.items.push_back({u});
  return out;
}

// Backtracking over per-vertex rotations for one connected component whose
// triangles must all bound distinct faces.
class ComponentSearch {
 public:
  ComponentSearch(const Skeleton& sk, const std::vector<int>& vertices,
                  std::uint64_t& budget)
      : sk_(sk), vertices_(vertices), budget_(budget) {}

  // Fills `rotation` (global indexing) on success.
  bool run(std::vector<std::vector<int>>& rotation) {
    for (int v : vertices_) {
      VertexItems items = build_vertex_items(sk_, v);
      if (!items.valid) return false;
      items_[v] = std::move(items);
    }
    for (Subset t : sk_.triangles) {
      const int a = std::countr_zero(t);
      Subset rest = t & (t - 1);
      const int b = std::countr_zero(rest);
      const int c = std::countr_zero(rest & (rest - 1));
      if (in_component(a)) triangles_.push_back({a, b, c});
    }

    order_ = vertices_;
    std::sort(order_.begin(), order_.end(), [&](int x, int y) {
      const double ax = arrangement_estimate(x), ay = arrangement_estimate(y);
      return ax != ay ? ax < ay : x < y;
    });

    rotation_.assign(sk_.n, {});
    assigned_.assign(sk_.n, false);
    if (!descend(0)) return false;
    rotation = rotation_;
    return true;
  }

 private:
  bool in_component(int v) const { return items_.count(v) != 0; }

  double arrangement_estimate(int v) const {
    const auto& items = items_.at(v);
    if (items.forced_cycle) return 2;
    double est = 1;
    for (std::size_t i = 1; i < items.items.size(); ++i)
      est *= static_cast<double>(i);
    for (const auto& item : items.items)
      if (item.size() >= 2) est *= 2;
    return est;
  }

  bool descend(std::size_t depth) {
    if (depth == order_.size()) return final_check();
    const int v = order_[depth];
    const VertexItems& items = items_.at(v);

    std::vector<int> item_order(items.items.size());
    for (std::size_t i = 0; i < item_order.size(); ++i)
      item_order[i] = static_cast<int>(i);
    std::vector<bool> flip(items.items.size(), false);

    // Enumerate cyclic arrangements: item 0 stays first, the rest are
    // permuted; every item of length >= 2 can be reversed. A two-neighbor
    // rotation has a single cyclic class, so skip its orientation bit.
    const bool skip_orientation =
        sk_.adj[v].size() <= 2 && items.items.size() == 1;
    return enumerate_arrangements(v, item_order, flip, 1, skip_orientation,
                                  depth);
  }

  bool enumerate_arrangements(int v, std::vector<int>& item_order,
                              std::vector<bool>& flip, std::size_t fixed,
                              bool skip_orientation, std::size_t depth) {
    if (fixed == item_order.size())
      return enumerate_orientations(v, item_order, flip, 0, skip_orientation,
                                    depth);
    for (std::size_t i = fixed; i < item_order.size(); ++i) {
      std::swap(item_order[fixed], item_order[i]);
      if (enumerate_arrangements(v, item_order, flip, fixed + 1,
                                 skip_orientation, depth))
        return true;
      std::swap(item_order[fixed], item_order[i]);
    }
    return false;
  }

  bool enumerate_orientations(int v, const std::vector<int>& item_order,
                              std::vector<bool>& flip, std::size_t pos,
                              bool skip_orientation, std::size_t depth) {
    const VertexItems& items = items_.at(v);
    if (pos == flip.size()) return try_rotation(v, item_order, flip, depth);
    if (skip_orientation || items.items[item_order[pos]].size() < 2) {
      flip[pos] = false;
      return enumerate_orientations(v, item_order, flip, pos + 1,
                                    skip_orientation, depth);
    }
    for (bool f : {false, true}) {
      flip[pos] = f;
      if (enumerate_orientations(v, item_order, flip, pos + 1,
                                 skip_orientation, depth))
        return true;
    }
    return false;
  }

  bool try_rotation(int v, const std::vector<int>& item_order,
                    const std::vector<bool>& flip, std::size_t depth) {
    if (budget_ == 0)
      throw SearchBudgetError("planar embedding search ran out of nodes",
                              PlanarityCertificate{});
    --budget_;

    const VertexItems& items = items_.at(v);
    std::vector<int>& rot = rotation_[v];
    rot.clear();
    for (std::size_t k = 0; k < item_order.size(); ++k) {
      const auto& item = items.items[item_order[k]];
      if (flip[k])
        rot.insert(rot.end(), item.rbegin(), item.rend());
      else
        rot.insert(rot.end(), item.begin(), item.end());
    }
    assigned_[v] = true;

    bool ok = true;
    for (const auto& t : triangles_) {
      if (!assigned_[t[0]] || !assigned_[t[1]] || !assigned_[t[2]]) continue;
      if (contains(t, v) && !triangle_bounds_face(t)) {
        ok = false;
        break;
      }
    }
    const bool found = ok && descend(depth + 1);
    if (!found) {
      assigned_[v] = false;
      rotation_[v].clear();
    }
    return found;
  }

  static bool contains(const std::array<int, 3>& t, int v) {
    return t[0] == v || t[1] == v || t[2] == v;
  }

  int successor(int at, int from) const {
    const auto& rot = rotation_[at];
    for (std::size_t i = 0; i < rot.size(); ++i)
      if (rot[i] == from) return rot[(i + 1) % rot.size()];
    return -1;
  }

  // The walk u->v->w->u is a face iff each corner routes it forward;
  // either orientation will do.
  bool triangle_bounds_face(const std::array<int, 3>& t) const {
    const int u = t[0], v = t[1], w = t[2];
    const bool forward = successor(v, u) == w && successor(w, v) == u &&
                         successor(u, w) == v;
    const bool backward = successor(w, u) == v && successor(v, w) == u &&
                          successor(u, v) == w;
    return forward || backward;
  }

  bool final_check() {
    // Genus 0 for this component: V - E + F = 2 under face tracing.
    long long edge_count = 0;
    std::vector<std::vector<int>> local(sk_.n);
    for (int v : vertices_) {
      local[v] = rotation_[v];
      edge_count += static_cast<long long>(rotation_[v].size());
    }
    edge_count /= 2;
    const FaceTrace trace = trace_faces(local);
    const long long euler = static_cast<long long>(vertices_.size()) -
                            edge_count + trace.face_count;
    return euler == 2;
  }

  const Skeleton& sk_;
  std::vector<int> vertices_;
  std::uint64_t& budget_;
  std::map<int, VertexItems> items_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<int> order_;
  std::vector<std::vector<int>> rotation_;
  std::vector<bool> assigned_;
};

std::vector<std::vector<int>> components_of(const Skeleton& sk) {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(sk.n, false);
  for (int s = 0; s < sk.n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : sk.adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace

bool is_planar_graph(const LabelledComplex& k) {
  const Skeleton sk(k);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < sk.n; ++v)
    for (int w : sk.adj[v])
      if (v < w) edges.emplace_back(v, w);
  return boost_planar(sk.n, edges);
}

PlanarityCertificate is_planar_complex(const LabelledComplex& k,
                                       std::uint64_t budget) {
  using O = PlanarityCertificate::Obstruction;
  PlanarityCertificate cert;

  if (k.empty()) {
    cert.verdict = true;
    return cert;
  }
  if (k.dim() >= 3) {
    cert.obstruction = O::Dim3Plus;
    return cert;
  }

  const Skeleton sk(k);
  for (const auto& [edge, count] : sk.edge_triangles)
    if (count >= 3) {
      cert.obstruction = O::EdgeInThreeTriangles;
      return cert;
    }

  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < sk.n; ++v)
    for (int w : sk.adj[v])
      if (v < w) edges.emplace_back(v, w);
  std::vector<std::vector<int>> graph_rotation;
  if (!boost_planar(sk.n, edges, &graph_rotation)) {
    cert.obstruction = O::NonplanarGraph;
    return cert;
  }
  if (is_S2_triangulation(k)) {
    cert.obstruction = O::IsWholeSphere;
    return cert;
  }

  // Necessary-condition prune: one extra vertex per triangle, joined to
  // its corners, must leave the graph planar. Never concludes planarity.
  if (!sk.triangles.empty()) {
    std::vector<std::pair<int, int>> augmented = edges;
    int next = sk.n;
    for (Subset t : sk.triangles) {
      for (Subset rest = t; rest;) {
        augmented.emplace_back(next, std::countr_zero(rest));
        rest &= rest - 1;
      }
      ++next;
    }
    if (!boost_planar(next, augmented)) {
      cert.obstruction = O::NoFaceAssignment;
      return cert;
    }
  }

  std::vector<std::vector<int>> rotation(sk.n);
  bool saw_sphere_component = false;
  for (const auto& comp : components_of(sk)) {
    long long comp_edges = 0, comp_triangles = 0;
    for (int v : comp) comp_edges += static_cast<long long>(sk.adj[v].size());
    comp_edges /= 2;
    const Subset comp_mask = [&] {
      Subset m = 0;
      for (int v : comp) m |= Subset{1} << v;
      return m;
    }();
    for (Subset t : sk.triangles)
      if (t & comp_mask) ++comp_triangles;

    if (comp_triangles == 0) {
      for (int v : comp) rotation[v] = graph_rotation[v];
      continue;
    }

    // Any genus-0 embedding of this component has exactly E - V + 2 faces.
    const long long face_budget =
        comp_edges - static_cast<long long>(comp.size()) + 2;
    if (comp_triangles > face_budget) {
      cert.obstruction = O::NoFaceAssignment;
      return cert;
    }
    std::vector<std::vector<int>> comp_rotation;
    ComponentSearch search(sk, comp, budget);
    bool found;
    try {
      found = search.run(comp_rotation);
    } catch (SearchBudgetError& e) {
      e.partial_certificate = cert;
      throw;
    }
    if (!found) {
      cert.obstruction = O::NoFaceAssignment;
      return cert;
    }
    if (comp_triangles == face_budget) {
      // Every face is spoken for: the component is a closed sphere.
      saw_sphere_component = true;
      continue;
    }
    for (int v : comp) rotation[v] = comp_rotation[v];
  }
  if (saw_sphere_component) {
    cert.obstruction = O::IsWholeSphere;
    return cert;
  }

  // Assemble the evidence: rotation, faces, and one face per triangle.
  cert.verdict = true;
  const auto& names = k.vertex_names();
  for (int v = 0; v < sk.n; ++v) {
    std::vector<std::string> order;
    for (int w : rotation[v]) order.push_back(names[w]);
    cert.rotation[names[v]] = std::move(order);
  }
  const FaceTrace trace = trace_faces(rotation);
  for (const auto& walk : trace.walks) {
    std::vector<std::string> face;
    for (int v : walk) face.push_back(names[v]);
    cert.faces.push_back(std::move(face));
  }
  std::set<int> assigned_faces;
  for (Subset t : sk.triangles) {
    std::set<int> corners;
    for (Subset rest = t; rest;) {
      corners.insert(std::countr_zero(rest));
      rest &= rest - 1;
    }
    std::vector<std::string> key;
    for (int c : corners) key.push_back(names[c]);
    for (int f = 0; f < static_cast<int>(trace.walks.size()); ++f) {
      const auto& walk = trace.walks[f];
      if (walk.size() == 3 &&
          std::set<int>(walk.begin(), walk.end()) == corners &&
          assigned_faces.insert(f).second) {
        cert.triangle_faces[key] = f;
        break;
      }
    }
  }
  if (!verify_planarity_certificate(k, cert))
    throw Error(Errc::InvariantBreach,
                "embedding search produced an invalid certificate");
  return cert;
}

bool brute_force_planar(const LabelledComplex& k) {
  if (k.vertex_count() > 8)
    throw Error(Errc::TooLarge, "brute force oracle handles at most 8 vertices");
  if (k.dim() >= 3) return false;
  const Skeleton sk(k);
  for (const auto& [edge, count] : sk.edge_triangles)
    if (count >= 3) return false;

  for (const auto& comp : components_of(sk)) {
    if (comp.size() == 1) continue;
    long long comp_edges = 0, comp_triangles = 0;
    const Subset comp_mask = [&] {
      Subset m = 0;
      for (int v : comp) m |= Subset{1} << v;
      return m;
    }();
    for (int v : comp) comp_edges += static_cast<long long>(sk.adj[v].size());
    comp_edges /= 2;
    std::vector<Subset> comp_triangle_masks;
    for (Subset t : sk.triangles)
      if (t & comp_mask) {
        comp_triangle_masks.push_back(t);
        ++comp_triangles;
      }

    double space = 1;
    for (int v : comp) {
      double f = 1;
      for (std::size_t i = 2; i < sk.adj[v].size(); ++i)
        f *= static_cast<double>(i);
      space *= f;
    }
    if (space > 5e7)
      throw Error(Errc::TooLarge,
                  "rotation space too large for the brute force oracle");

    // Odometer over circular neighbor orders: first neighbor pinned,
    // remaining neighbors in every order.
    std::vector<std::vector<int>> rotation(sk.n);
    std::vector<std::vector<int>> perm_state;
    for (int v : comp) rotation[v] = sk.adj[v];

    std::vector<int> order(comp);
    bool found = false;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
      if (found) return;
      if (idx == order.size()) {
        std::vector<std::vector<int>> local(sk.n);
        long long dart_edges = 0;
        for (int v : comp) {
          local[v] = rotation[v];
          dart_edges += static_cast<long long>(rotation[v].size());
        }
        const FaceTrace trace = trace_faces(local);
        if (static_cast<long long>(comp.size()) - dart_edges / 2 +
                trace.face_count != 2)
          return;
        // Each triangle needs its own length-3 face; a face determines
        // its triangle, so distinctness is automatic.
        long long matched = 0;
        for (Subset t : comp_triangle_masks) {
          std::set<int> corners;
          for (Subset rest = t; rest;) {
            corners.insert(std::countr_zero(rest));
            rest &= rest - 1;
          }
          for (const auto& walk : trace.walks)
            if (walk.size() == 3 &&
                std::set<int>(walk.begin(), walk.end()) == corners) {
              ++matched;
              break;
            }
        }
        if (matched != static_cast<long long>(comp_triangle_masks.size()))
          return;
        if (trace.face_count - matched < 1) return;  // no face left over
        found = true;
        return;
      }
      const int v = order[idx];
      std::vector<int>& rot = rotation[v];
      // Permute rot[1..] through all arrangements.
      std::sort(rot.begin() + 1, rot.end());
      do {
        self(self, idx + 1);
        if (found) return;
      } while (std::next_permutation(rot.begin() + 1, rot.end()));
    };
    rec(rec, 0);
    if (!found) return false;
  }
  return true;
}

bool verify_planarity_certificate(const LabelledComplex& k,
                                  const PlanarityCertificate& cert) {
  if (!cert.verdict) return false;
  const Skeleton sk(k);
  const auto& names = k.vertex_names();

  std::vector<std::vector<int>> rotation(sk.n);
  for (int v = 0; v < sk.n; ++v) {
    auto it = cert.rotation.find(names[v]);
    if (it == cert.rotation.end()) return false;
    std::set<int> seen;
    for (const auto& w : it->second) {
      if (!k.has_vertex(w)) return false;
      const int wi = k.vertex_index(w);
      rotation[v].push_back(wi);
      if (!seen.insert(wi).second) return false;
    }
    std::vector<int> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != sk.adj[v]) return false;
  }

  const FaceTrace trace = trace_faces(rotation);
  if (trace.walks.size() != cert.faces.size()) return false;

  // Per-component Euler characteristic must be 2.
  for (const auto& comp : components_of(sk)) {
    long long comp_edges = 0;
    std::set<int> comp_set(comp.begin(), comp.end());
    for (int v : comp) comp_edges += static_cast<long long>(sk.adj[v].size());
    comp_edges /= 2;
    long long faces = comp_edges == 0 ? 1 : 0;
    for (const auto& walk : trace.walks)
      if (!walk.empty() && comp_set.count(walk[0])) ++faces;
    if (static_cast<long long>(comp.size()) - comp_edges + faces != 2)
      return false;
  }

  // Triangle bookkeeping: every 2-simplex gets its own face, and the
  // face's walk is exactly that triangle.
  std::set<int> used_faces;
  for (Subset t : sk.triangles) {
    std::vector<std::string> key;
    std::set<int> corners;
    for (Subset rest = t; rest;) {
      corners.insert(std::countr_zero(rest));
      rest &= rest - 1;
    }
    for (int c : corners) key.push_back(names[c]);
    auto it = cert.triangle_faces.find(key);
    if (it == cert.triangle_faces.end()) return false;
    const int f = it->second;
    if (f < 0 || f >= static_cast<int>(trace.walks.size())) return false;
    if (!used_faces.insert(f).second) return false;
    const auto& walk = trace.walks[f];
    if (walk.size() != 3 || std::set<int>(walk.begin(), walk.end()) != corners)
      return false;
  }

  // At least one face per triangle-bearing component is free; globally it
  // is enough that some face (or an edgeless component's region) is free.
  for (const auto& comp : components_of(sk)) {
    const Subset comp_mask = [&] {
      Subset m = 0;
      for (int v : comp) m |= Subset{1} << v;
      return m;
    }();
    long long comp_triangles = 0;
    for (Subset t : sk.triangles)
      if (t & comp_mask) ++comp_triangles;
    if (comp_triangles == 0) continue;
    std::set<int> comp_set(comp.begin(), comp.end());
    long long comp_faces = 0;
    for (const auto& walk : trace.walks)
      if (!walk.empty() && comp_set.count(walk[0])) ++comp_faces;
    if (comp_faces - comp_triangles < 1) return false;
  }
  return true;
}

}  // namespace nervecheck

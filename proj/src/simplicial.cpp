#include "nervecheck/simplicial.hpp"

#include <algorithm>
#include <bit>

namespace nervecheck {

bool LabelledComplex::has_vertex(const std::string& name) const {
  return index_.count(name) != 0;
}

int LabelledComplex::vertex_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw Error(Errc::UnknownVertex, "no vertex named '" + name + "'");
  return it->second;
}

bool LabelledComplex::contains(
    const std::vector<std::string>& simplex) const {
  Subset mask = 0;
  for (const auto& v : simplex) {
    auto it = index_.find(v);
    if (it == index_.end()) return false;
    mask |= Subset{1} << it->second;
  }
  return mask != 0 && contains_mask(mask);
}

int LabelledComplex::edge_label_mask(Subset edge) const {
  auto it = labels_.find(edge);
  if (it == labels_.end())
    throw Error(Errc::InvariantBreach, "label requested for a non-edge");
  return it->second;
}

int LabelledComplex::edge_label(const std::string& u,
                                const std::string& v) const {
  return edge_label_mask((Subset{1} << vertex_index(u)) |
                         (Subset{1} << vertex_index(v)));
}

Subset LabelledComplex::mask_of(const std::vector<std::string>& vertices)
    const {
  Subset mask = 0;
  for (const auto& v : vertices) mask |= Subset{1} << vertex_index(v);
  return mask;
}

Subset LabelledComplex::mask_of(const std::set<std::string>& vertices) const {
  Subset mask = 0;
  for (const auto& v : vertices) mask |= Subset{1} << vertex_index(v);
  return mask;
}

std::vector<std::string> LabelledComplex::names_of(Subset mask) const {
  std::vector<std::string> out;
  for (int i = 0; i < vertex_count(); ++i)
    if (mask >> i & 1) out.push_back(names_[i]);
  return out;
}

std::vector<int> LabelledComplex::simplex_counts_per_dim() const {
  std::vector<int> counts;
  for (const auto& level : by_dim_)
    counts.push_back(static_cast<int>(level.size()));
  return counts;
}

void LabelledComplex::finalize_and_validate() {
  index_.clear();
  for (int i = 0; i < vertex_count(); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw Error(Errc::DuplicateName, "vertex '" + names_[i] + "'");
  }
  if (vertex_count() > kHardRankLimit)
    throw Error(Errc::TooLarge, "complexes support at most 64 vertices");

  by_dim_.clear();
  const Subset full = full_mask();
  for (Subset s : simplices_) {
    if (!s || (s & ~full))
      throw Error(Errc::UnknownVertex, "simplex outside the vertex set");
    const int d = std::popcount(s) - 1;
    if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(d + 1);
    by_dim_[d].push_back(s);
    // Face-closedness: all facets must be present.
    if (d >= 1)
      for (Subset rest = s; rest;) {
        const Subset bit = rest & (~rest + 1);
        rest &= rest - 1;
        if (!simplices_.count(s & ~bit))
          throw Error(Errc::InvariantBreach, "complex is not face-closed");
      }
  }
  for (int i = 0; i < vertex_count(); ++i)
    if (!simplices_.count(Subset{1} << i))
      throw Error(Errc::InvariantBreach,
                  "vertex '" + names_[i] + "' has no singleton simplex");

  // Labels live on exactly the 2-element simplices.
  for (const auto& [edge, label] : labels_) {
    if (std::popcount(edge) != 2 || !simplices_.count(edge))
      throw Error(Errc::InvariantBreach, "label on a non-edge");
    if (label < 2)
      throw Error(Errc::InvariantBreach, "edge labels must be >= 2");
  }
  if (static_cast<int>(by_dim_.size()) >= 2 &&
      labels_.size() != by_dim_[1].size())
    throw Error(Errc::InvariantBreach, "unlabelled edge");
}

LabelledComplex LabelledComplex::from_masks(std::vector<std::string> vertices,
                                            std::set<Subset> simplices,
                                            std::map<Subset, int> labels) {
  LabelledComplex k;
  k.names_ = std::move(vertices);
  k.simplices_ = std::move(simplices);
  k.labels_ = std::move(labels);
  k.finalize_and_validate();
  return k;
}

LabelledComplex LabelledComplex::make(
    const std::vector<std::string>& vertices,
    const std::vector<std::vector<std::string>>& simplices,
    const std::map<std::pair<std::string, std::string>, int>& labels) {
  LabelledComplex k;
  k.names_ = vertices;
  k.index_.clear();
  for (int i = 0; i < k.vertex_count(); ++i) {
    if (!k.index_.emplace(k.names_[i], i).second)
      throw Error(Errc::DuplicateName, "vertex '" + k.names_[i] + "'");
  }
  for (const auto& s : simplices) k.simplices_.insert(k.mask_of(s));
  for (const auto& [edge, label] : labels)
    k.labels_[(Subset{1} << k.vertex_index(edge.first)) |
              (Subset{1} << k.vertex_index(edge.second))] = label;
  k.finalize_and_validate();
  return k;
}

LabelledComplex LabelledComplex::closure_of(
    const std::vector<std::string>& vertices,
    const std::vector<std::vector<std::string>>& top_simplices,
    const std::map<std::pair<std::string, std::string>, int>& labels) {
  LabelledComplex k;
  k.names_ = vertices;
  k.index_.clear();
  for (int i = 0; i < k.vertex_count(); ++i) {
    if (!k.index_.emplace(k.names_[i], i).second)
      throw Error(Errc::DuplicateName, "vertex '" + k.names_[i] + "'");
  }
  for (int i = 0; i < k.vertex_count(); ++i)
    k.simplices_.insert(Subset{1} << i);
  // Close each top simplex under taking faces.
  for (const auto& s : top_simplices) {
    const Subset mask = k.mask_of(s);
    std::vector<Subset> stack{mask};
    while (!stack.empty()) {
      const Subset cur = stack.back();
      stack.pop_back();
      if (!cur || !k.simplices_.insert(cur).second) continue;
      for (Subset rest = cur; rest;) {
        const Subset bit = rest & (~rest + 1);
        rest &= rest - 1;
        if (std::popcount(cur) > 1) stack.push_back(cur & ~bit);
      }
    }
  }
  for (const auto& [edge, label] : labels) {
    const Subset mask = (Subset{1} << k.vertex_index(edge.first)) |
                        (Subset{1} << k.vertex_index(edge.second));
    if (k.simplices_.count(mask)) k.labels_[mask] = label;
  }
  k.finalize_and_validate();
  return k;
}

bool operator==(const LabelledComplex& a, const LabelledComplex& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.simplices_.size() != b.simplices_.size() ||
      a.labels_.size() != b.labels_.size())
    return false;
  // Map a's indices to b's; vertex order is allowed to differ.
  std::vector<int> to_b(a.vertex_count());
  for (int i = 0; i < a.vertex_count(); ++i) {
    auto it = b.index_.find(a.names_[i]);
    if (it == b.index_.end()) return false;
    to_b[i] = it->second;
  }
  auto translate = [&](Subset mask) {
    Subset out = 0;
    for (int i = 0; i < a.vertex_count(); ++i)
      if (mask >> i & 1) out |= Subset{1} << to_b[i];
    return out;
  };
  for (Subset s : a.simplices_)
    if (!b.simplices_.count(translate(s))) return false;
  for (const auto& [edge, label] : a.labels_) {
    auto it = b.labels_.find(translate(edge));
    if (it == b.labels_.end() || it->second != label) return false;
  }
  return true;
}

LabelledComplex full_subcomplex_mask(const LabelledComplex& k, Subset keep) {
  std::vector<std::string> names;
  std::vector<int> new_index(k.vertex_count(), -1);
  for (int i = 0; i < k.vertex_count(); ++i)
    if (keep >> i & 1) {
      new_index[i] = static_cast<int>(names.size());
      names.push_back(k.vertex_names()[i]);
    }
  auto translate = [&](Subset mask) {
    Subset out = 0;
    for (int i = 0; i < k.vertex_count(); ++i)
      if (mask >> i & 1) out |= Subset{1} << new_index[i];
    return out;
  };
  std::set<Subset> simplices;
  for (Subset s : k.simplex_masks())
    if (!(s & ~keep)) simplices.insert(translate(s));
  std::map<Subset, int> labels;
  for (const auto& [edge, label] : k.edge_labels())
    if (!(edge & ~keep)) labels[translate(edge)] = label;
  return LabelledComplex::from_masks(std::move(names), std::move(simplices),
                                     std::move(labels));
}

LabelledComplex full_subcomplex(const LabelledComplex& k,
                                const std::set<std::string>& vertices) {
  return full_subcomplex_mask(k, k.mask_of(vertices));
}

LabelledComplex labelled_join(const LabelledComplex& k1,
                              const LabelledComplex& k2) {
  for (const auto& name : k2.vertex_names())
    if (k1.has_vertex(name))
      throw Error(Errc::VertexClash, "vertex '" + name + "' in both factors");

  const int n1 = k1.vertex_count();
  std::vector<std::string> names = k1.vertex_names();
  names.insert(names.end(), k2.vertex_names().begin(),
               k2.vertex_names().end());

  std::set<Subset> simplices;
  std::vector<Subset> left{0}, right{0};
  for (Subset s : k1.simplex_masks()) left.push_back(s);
  for (Subset s : k2.simplex_masks()) right.push_back(s << n1);
  for (Subset a : left)
    for (Subset b : right)
      if (a | b) simplices.insert(a | b);

  std::map<Subset, int> labels(k1.edge_labels());
  for (const auto& [edge, label] : k2.edge_labels())
    labels[edge << n1] = label;
  // Connecting edges between the factors are labelled 2.
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < k2.vertex_count(); ++j)
      labels[(Subset{1} << i) | (Subset{1} << (n1 + j))] = 2;

  return LabelledComplex::from_masks(std::move(names), std::move(simplices),
                                     std::move(labels));
}

LabelledComplex cone(const LabelledComplex& k, const std::string& apex) {
  return labelled_join(k, LabelledComplex::make({apex}, {{apex}}, {}));
}

std::vector<Subset> connected_component_masks(const LabelledComplex& k) {
  const int n = k.vertex_count();
  std::vector<Subset> adj(n, 0);
  if (k.dim() >= 1)
    for (Subset e : k.masks_by_dim()[1]) {
      const int u = std::countr_zero(e);
      const int v = std::countr_zero(e & (e - 1));
      adj[u] |= Subset{1} << v;
      adj[v] |= Subset{1} << u;
    }
  std::vector<Subset> components;
  Subset remaining = k.full_mask();
  while (remaining) {
    const int start = std::countr_zero(remaining);
    Subset comp = 0, frontier = Subset{1} << start;
    while (frontier) {
      comp |= frontier;
      Subset next = 0;
      for (Subset f = frontier; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj[v];
      }
      frontier = next & ~comp;
    }
    components.push_back(comp);
    remaining &= ~comp;
  }
  return components;
}

bool is_connected(const LabelledComplex& k) {
  return connected_component_masks(k).size() == 1;
}

int dim(const LabelledComplex& k) { return k.dim(); }

bool is_simplex(const LabelledComplex& k) {
  return k.contains_mask(k.full_mask());
}

bool is_3_cycle(const LabelledComplex& k) {
  const auto counts = k.simplex_counts_per_dim();
  return counts.size() == 2 && counts[0] == 3 && counts[1] == 3;
}

bool is_S1_triangulation(const LabelledComplex& k) {
  if (k.dim() != 1 || !is_connected(k)) return false;
  std::vector<int> degree(k.vertex_count(), 0);
  for (Subset e : k.masks_by_dim()[1]) {
    ++degree[std::countr_zero(e)];
    ++degree[std::countr_zero(e & (e - 1))];
  }
  return std::all_of(degree.begin(), degree.end(),
                     [](int d) { return d == 2; });
}

bool is_S2_triangulation(const LabelledComplex& k) {
  if (k.dim() != 2 || !is_connected(k)) return false;
  const auto& by_dim = k.masks_by_dim();
  const auto& edges = by_dim[1];
  const auto& triangles = by_dim[2];

  // Every maximal simplex is a 2-simplex: every vertex and edge lies in
  // some triangle (vertices follow from edges here, but stay explicit).
  std::map<Subset, int> triangles_per_edge;
  std::vector<bool> vertex_in_triangle(k.vertex_count(), false);
  for (Subset t : triangles) {
    for (Subset rest = t; rest;) {
      const Subset bit = rest & (~rest + 1);
      rest &= rest - 1;
      triangles_per_edge[t & ~bit] += 1;
      vertex_in_triangle[std::countr_zero(bit)] = true;
    }
  }
  for (int v = 0; v < k.vertex_count(); ++v)
    if (!vertex_in_triangle[v]) return false;
  for (Subset e : edges) {
    auto it = triangles_per_edge.find(e);
    if (it == triangles_per_edge.end() || it->second != 2) return false;
  }

  // The link of every vertex must be one cycle.
  for (int v = 0; v < k.vertex_count(); ++v) {
    const Subset vbit = Subset{1} << v;
    std::map<int, int> link_degree;
    for (Subset e : edges)
      if (e & vbit) link_degree[std::countr_zero(e & ~vbit)] = 0;
    std::map<int, std::vector<int>> link_adj;
    for (Subset t : triangles)
      if (t & vbit) {
        const Subset rest = t & ~vbit;
        const int a = std::countr_zero(rest);
        const int b = std::countr_zero(rest & (rest - 1));
        ++link_degree[a];
        ++link_degree[b];
        link_adj[a].push_back(b);
        link_adj[b].push_back(a);
      }
    for (const auto& [u, d] : link_degree)
      if (d != 2) return false;
    // Connectivity of the link graph.
    if (link_degree.empty()) return false;
    std::set<int> seen;
    std::vector<int> stack{link_degree.begin()->first};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (!seen.insert(u).second) continue;
      for (int w : link_adj[u]) stack.push_back(w);
    }
    if (seen.size() != link_degree.size()) return false;
  }

  const long long v = static_cast<long long>(k.vertex_count());
  const long long e = static_cast<long long>(edges.size());
  const long long f = static_cast<long long>(triangles.size());
  return v - e + f == 2;
}

}  // namespace nervecheck

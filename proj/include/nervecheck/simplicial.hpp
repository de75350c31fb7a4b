// Labelled simplicial complexes with explicitly stored simplices.
// Nerves of Coxeter systems are generally not flag complexes, so nothing
// here is generated from a clique condition.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nervecheck/coxeter.hpp"

namespace nervecheck {

// Vertex subsets of one complex are bitmasks over its local vertex indices
// (index = position in vertex_names()). At most 64 vertices per complex.
class LabelledComplex {
 public:
  LabelledComplex() = default;  // the empty complex

  // Validating constructor: requires face-closedness, a singleton simplex
  // for every vertex, and labels on exactly the 2-element simplices.
  static LabelledComplex make(
      const std::vector<std::string>& vertices,
      const std::vector<std::vector<std::string>>& simplices,
      const std::map<std::pair<std::string, std::string>, int>& labels);

  // Convenience constructor: closes the given simplices under taking faces
  // and adds all vertex singletons, then validates.
  static LabelledComplex closure_of(
      const std::vector<std::string>& vertices,
      const std::vector<std::vector<std::string>>& top_simplices,
      const std::map<std::pair<std::string, std::string>, int>& labels);

  // Mask-level constructor used by the complex-producing operations.
  static LabelledComplex from_masks(std::vector<std::string> vertices,
                                    std::set<Subset> simplices,
                                    std::map<Subset, int> labels);

  bool empty() const { return names_.empty(); }
  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  bool has_vertex(const std::string& name) const;
  int vertex_index(const std::string& name) const;  // throws UnknownVertex

  const std::set<Subset>& simplex_masks() const { return simplices_; }
  const std::vector<std::vector<Subset>>& masks_by_dim() const {
    return by_dim_;
  }
  bool contains_mask(Subset mask) const { return simplices_.count(mask) != 0; }
  bool contains(const std::vector<std::string>& simplex) const;

  // Dimension: max simplex size - 1, or -1 for the empty complex.
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  const std::map<Subset, int>& edge_labels() const { return labels_; }
  int edge_label_mask(Subset edge) const;
  int edge_label(const std::string& u, const std::string& v) const;

  Subset full_mask() const {
    return names_.empty()
               ? 0
               : (names_.size() == 64 ? ~Subset{0}
                                      : (Subset{1} << names_.size()) - 1);
  }
  Subset mask_of(const std::vector<std::string>& vertices) const;
  Subset mask_of(const std::set<std::string>& vertices) const;
  std::vector<std::string> names_of(Subset mask) const;

  std::vector<int> simplex_counts_per_dim() const;

  // Name-identity equality (vertex order does not matter).
  friend bool operator==(const LabelledComplex& a, const LabelledComplex& b);

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::set<Subset> simplices_;
  std::vector<std::vector<Subset>> by_dim_;
  std::map<Subset, int> labels_;

  void finalize_and_validate();
};

LabelledComplex full_subcomplex(const LabelledComplex& k,
                                const std::set<std::string>& vertices);
LabelledComplex full_subcomplex_mask(const LabelledComplex& k, Subset keep);

LabelledComplex labelled_join(const LabelledComplex& k1,
                              const LabelledComplex& k2);

LabelledComplex cone(const LabelledComplex& k, const std::string& apex);

// Connected components of the 1-skeleton, isolated vertices included,
// as masks over k's vertex indices. Deterministic order.
std::vector<Subset> connected_component_masks(const LabelledComplex& k);

bool is_connected(const LabelledComplex& k);  // empty complex: false
int dim(const LabelledComplex& k);
bool is_simplex(const LabelledComplex& k);

bool is_3_cycle(const LabelledComplex& k);
bool is_S1_triangulation(const LabelledComplex& k);
bool is_S2_triangulation(const LabelledComplex& k);

}  // namespace nervecheck

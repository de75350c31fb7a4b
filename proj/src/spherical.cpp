#include "nervecheck/spherical.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace nervecheck {

std::string IrreducibleTypeTag::str() const {
  switch (kind) {
    case Kind::Indefinite:
      return "Indefinite";
    case Kind::Finite:
      switch (finite_family) {
        case FiniteFamily::A: return "A" + std::to_string(rank);
        case FiniteFamily::B: return "B" + std::to_string(rank);
        case FiniteFamily::D: return "D" + std::to_string(rank);
        case FiniteFamily::E6: return "E6";
        case FiniteFamily::E7: return "E7";
        case FiniteFamily::E8: return "E8";
        case FiniteFamily::F4: return "F4";
        case FiniteFamily::H3: return "H3";
        case FiniteFamily::H4: return "H4";
        case FiniteFamily::I2:
          return "I2(" + std::to_string(dihedral_m) + ")";
      }
      break;
    case Kind::Affine:
      switch (affine_family) {
        case AffineFamily::A: return "~A" + std::to_string(rank);
        case AffineFamily::B: return "~B" + std::to_string(rank);
        case AffineFamily::C: return "~C" + std::to_string(rank);
        case AffineFamily::D: return "~D" + std::to_string(rank);
        case AffineFamily::E6: return "~E6";
        case AffineFamily::E7: return "~E7";
        case AffineFamily::E8: return "~E8";
        case AffineFamily::F4: return "~F4";
        case AffineFamily::G2: return "~G2";
      }
      break;
  }
  return "?";
}

namespace {

// A reference diagram on vertices 0..n-1 with labelled edges.
struct RefDiagram {
  int n = 0;
  std::vector<std::tuple<int, int, int>> edges;  // (i, j, finite label >= 3)
};

RefDiagram path(const std::vector<int>& labels) {
  RefDiagram d;
  d.n = static_cast<int>(labels.size()) + 1;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    d.edges.emplace_back(i, i + 1, labels[i]);
  return d;
}

RefDiagram uniform_path(int n, int label_at_start = 3) {
  std::vector<int> labels(n - 1, 3);
  if (!labels.empty()) labels[0] = label_at_start;
  return path(labels);
}

RefDiagram cycle(int n) {
  RefDiagram d;
  d.n = n;
  for (int i = 0; i < n; ++i) d.edges.emplace_back(i, (i + 1) % n, 3);
  return d;
}

// Two leaves 0,1 attached to 2, then a chain 2-3-...-(n-1); the far end
// edge optionally labelled 4 (affine B-type).
RefDiagram forked_path(int n, int far_label) {
  RefDiagram d;
  d.n = n;
  d.edges.emplace_back(0, 2, 3);
  d.edges.emplace_back(1, 2, 3);
  for (int i = 2; i + 1 < n; ++i)
    d.edges.emplace_back(i, i + 1, i + 2 == n ? far_label : 3);
  return d;
}

// Forks at both ends of a chain (affine D-type), n >= 5 vertices.
RefDiagram double_forked_path(int n) {
  RefDiagram d;
  d.n = n;
  d.edges.emplace_back(0, 2, 3);
  d.edges.emplace_back(1, 2, 3);
  for (int i = 2; i + 3 < n; ++i) d.edges.emplace_back(i, i + 1, 3);
  d.edges.emplace_back(n - 3, n - 2, 3);
  d.edges.emplace_back(n - 3, n - 1, 3);
  return d;
}

// Central vertex with three simple arms of the given vertex counts.
RefDiagram t_shape(int a, int b, int c) {
  RefDiagram d;
  d.n = 1 + a + b + c;
  int next = 1;
  for (int arm : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < arm; ++i) {
      d.edges.emplace_back(prev, next, 3);
      prev = next++;
    }
  }
  return d;
}

struct Component {
  int n = 0;
  std::vector<Label> labels;  // n x n, diagonal unused
  Label at(int i, int j) const { return labels[i * n + j]; }
};

std::vector<int> degree_sequence(const Component& c) {
  std::vector<int> deg(c.n, 0);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j)
      if (i != j && c.at(i, j) != Label::finite(2)) ++deg[i];
  return deg;
}

bool matches(const Component& comp, const RefDiagram& ref) {
  if (comp.n != ref.n) return false;

  int comp_edges = 0;
  std::vector<int> comp_label_multiset;
  for (int i = 0; i < comp.n; ++i)
    for (int j = i + 1; j < comp.n; ++j) {
      const Label l = comp.at(i, j);
      if (l == Label::finite(2)) continue;
      if (l.is_inf()) return false;  // no reference diagram has inf edges
      ++comp_edges;
      comp_label_multiset.push_back(l.value());
    }
  if (comp_edges != static_cast<int>(ref.edges.size())) return false;

  std::vector<int> ref_label_multiset;
  for (auto [i, j, l] : ref.edges) ref_label_multiset.push_back(l);
  std::sort(comp_label_multiset.begin(), comp_label_multiset.end());
  std::sort(ref_label_multiset.begin(), ref_label_multiset.end());
  if (comp_label_multiset != ref_label_multiset) return false;

  std::vector<std::vector<int>> ref_label(ref.n, std::vector<int>(ref.n, 2));
  std::vector<int> ref_deg(ref.n, 0);
  for (auto [i, j, l] : ref.edges) {
    ref_label[i][j] = ref_label[j][i] = l;
    ++ref_deg[i];
    ++ref_deg[j];
  }
  std::vector<int> comp_deg = degree_sequence(comp);
  {
    auto a = comp_deg, b = ref_deg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }

  // Order reference vertices so each one after the first touches an
  // already-placed vertex; the diagrams are connected.
  std::vector<int> order;
  {
    std::vector<bool> seen(ref.n, false);
    order.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (int j = 0; j < ref.n; ++j)
        if (!seen[j] && ref_label[order[head]][j] != 2) {
          seen[j] = true;
          order.push_back(j);
        }
    if (static_cast<int>(order.size()) != ref.n) return false;
  }

  std::vector<int> map_to(ref.n, -1);   // ref vertex -> comp vertex
  std::vector<bool> used(comp.n, false);

  auto backtrack = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const int r = order[pos];
    for (int v = 0; v < comp.n; ++v) {
      if (used[v] || comp_deg[v] != ref_deg[r]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        const int r2 = order[q];
        const int want = ref_label[r][r2];
        const Label have = comp.at(v, map_to[r2]);
        ok = want == 2 ? have == Label::finite(2)
                       : have == Label::finite(want);
      }
      if (!ok) continue;
      map_to[r] = v;
      used[v] = true;
      if (self(self, pos + 1)) return true;
      used[v] = false;
      map_to[r] = -1;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

IrreducibleTypeTag classify_component(const Component& comp) {
  const int k = comp.n;
  if (k == 1) return IrreducibleTypeTag::finite(FiniteFamily::A, 1);
  if (k == 2) {
    const Label l = comp.at(0, 1);
    if (l.is_inf()) return IrreducibleTypeTag::affine(AffineFamily::A, 1);
    switch (l.value()) {
      case 3: return IrreducibleTypeTag::finite(FiniteFamily::A, 2);
      case 4: return IrreducibleTypeTag::finite(FiniteFamily::B, 2);
      default:
        return IrreducibleTypeTag::finite(FiniteFamily::I2, 2, l.value());
    }
  }

  // No affine or finite diagram on >= 3 vertices carries an inf label.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (comp.at(i, j).is_inf()) return IrreducibleTypeTag::indefinite();

  using Tag = IrreducibleTypeTag;
  struct Candidate {
    RefDiagram diagram;
    Tag tag;
  };
  std::vector<Candidate> candidates;
  candidates.push_back({uniform_path(k), Tag::finite(FiniteFamily::A, k)});
  candidates.push_back({uniform_path(k, 4), Tag::finite(FiniteFamily::B, k)});
  if (k >= 4)
    candidates.push_back({forked_path(k, 3), Tag::finite(FiniteFamily::D, k)});
  if (k == 6) candidates.push_back({t_shape(1, 2, 2), Tag::finite(FiniteFamily::E6, 6)});
  if (k == 7) candidates.push_back({t_shape(1, 2, 3), Tag::finite(FiniteFamily::E7, 7)});
  if (k == 8) candidates.push_back({t_shape(1, 2, 4), Tag::finite(FiniteFamily::E8, 8)});
  if (k == 4) candidates.push_back({path({3, 4, 3}), Tag::finite(FiniteFamily::F4, 4)});
  if (k == 3) candidates.push_back({path({5, 3}), Tag::finite(FiniteFamily::H3, 3)});
  if (k == 4) candidates.push_back({path({5, 3, 3}), Tag::finite(FiniteFamily::H4, 4)});

  candidates.push_back({cycle(k), Tag::affine(AffineFamily::A, k - 1)});
  if (k >= 4)
    candidates.push_back({forked_path(k, 4), Tag::affine(AffineFamily::B, k - 1)});
  {
    std::vector<int> labels(k - 1, 3);
    labels.front() = 4;
    labels.back() = 4;
    candidates.push_back({path(labels), Tag::affine(AffineFamily::C, k - 1)});
  }
  if (k >= 5)
    candidates.push_back({double_forked_path(k), Tag::affine(AffineFamily::D, k - 1)});
  if (k == 7) candidates.push_back({t_shape(2, 2, 2), Tag::affine(AffineFamily::E6, 6)});
  if (k == 8) candidates.push_back({t_shape(1, 3, 3), Tag::affine(AffineFamily::E7, 7)});
  if (k == 9) candidates.push_back({t_shape(1, 2, 5), Tag::affine(AffineFamily::E8, 8)});
  if (k == 5) candidates.push_back({path({3, 3, 4, 3}), Tag::affine(AffineFamily::F4, 4)});
  if (k == 3) candidates.push_back({path({3, 6}), Tag::affine(AffineFamily::G2, 2)});

  for (const Candidate& c : candidates)
    if (matches(comp, c.diagram)) return c.tag;
  return Tag::indefinite();
}

Component extract_component(const CoxeterMatrix& m, Subset subset) {
  Component comp;
  std::vector<int> idx;
  for (int i = 0; i < m.rank(); ++i)
    if (subset >> i & 1) idx.push_back(i);
  comp.n = static_cast<int>(idx.size());
  comp.labels.assign(static_cast<std::size_t>(comp.n) * comp.n,
                     Label::finite(1));
  for (int a = 0; a < comp.n; ++a)
    for (int b = 0; b < comp.n; ++b)
      comp.labels[a * comp.n + b] = m.label(idx[a], idx[b]);
  return comp;
}

}  // namespace

IrreducibleTypeTag classify_irreducible_mask(const CoxeterMatrix& m,
                                             Subset subset) {
  if (!subset)
    throw Error(Errc::EmptySubset, "classify_irreducible of the empty set");
  if (diagram_component_masks(m, subset).size() != 1)
    throw Error(Errc::NotConnected,
                "classify_irreducible needs a connected diagram");
  return classify_component(extract_component(m, subset));
}

IrreducibleTypeTag classify_irreducible(const CoxeterMatrix& m,
                                        const GeneratorSet& subset) {
  return classify_irreducible_mask(m, m.mask_of(subset));
}

bool is_spherical_mask(const CoxeterMatrix& m, Subset subset) {
  if (!subset) return true;
  for (Subset comp : diagram_component_masks(m, subset))
    if (!classify_component(extract_component(m, comp)).is_finite_type())
      return false;
  return true;
}

bool is_spherical(const CoxeterMatrix& m, const GeneratorSet& subset) {
  return is_spherical_mask(m, m.mask_of(subset));
}

bool SphericalOracle::is_spherical(Subset mask) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
  }
  const bool result = is_spherical_mask(matrix_, mask);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(mask, result);
  return result;
}

Eigen::MatrixXd cosine_matrix(const CoxeterMatrix& m,
                              const GeneratorSet& subset) {
  if (subset.empty())
    throw Error(Errc::EmptySubset, "cosine_matrix of the empty subset");
  std::vector<int> idx;
  for (const auto& name : subset) idx.push_back(m.index(name));
  const int k = static_cast<int>(idx.size());
  Eigen::MatrixXd b(k, k);
  for (int a = 0; a < k; ++a) {
    for (int c = 0; c < k; ++c) {
      if (a == c) {
        b(a, c) = 1.0;
        continue;
      }
      const Label l = m.label(idx[a], idx[c]);
      b(a, c) = l.is_inf()
                    ? -1.0
                    : -std::cos(std::numbers::pi / l.value());
    }
  }
  return b;
}

Definiteness definiteness(const Eigen::MatrixXd& b, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      b, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  int near_zero = 0;
  bool negative = false;
  bool positive_all = true;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev[i] < -tol) negative = true;
    if (std::abs(ev[i]) <= tol) ++near_zero;
    if (ev[i] <= tol) positive_all = false;
  }
  if (positive_all) return Definiteness::PositiveDefinite;
  if (!negative && near_zero == 1) return Definiteness::SemidefiniteCorank1;
  return Definiteness::Other;
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::SemidefiniteCorank1: return "SemidefiniteCorank1";
    case Definiteness::Other: return "Other";
  }
  return "?";
}

}  // namespace nervecheck

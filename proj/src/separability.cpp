#include "nervecheck/separability.hpp"

#include <bit>

namespace nervecheck {

const char* to_string(SeparationWitness::Kind kind) {
  switch (kind) {
    case SeparationWitness::Kind::Disconnected: return "Disconnected";
    case SeparationWitness::Kind::SeparatingSimplex: return "SeparatingSimplex";
    case SeparationWitness::Kind::SeparatingPair: return "SeparatingPair";
    case SeparationWitness::Kind::SeparatingSuspension:
      return "SeparatingSuspension";
  }
  return "?";
}

namespace {

std::optional<SeparationWitness> separates_mask(const LabelledComplex& k,
                                                Subset removed,
                                                SeparationWitness::Kind kind) {
  const LabelledComplex rest = full_subcomplex_mask(k, k.full_mask() & ~removed);
  const auto components = connected_component_masks(rest);
  if (components.size() < 2) return std::nullopt;
  SeparationWitness w;
  w.kind = kind;
  w.removed = k.names_of(removed);
  for (Subset comp : components) w.components.push_back(rest.names_of(comp));
  return w;
}

}  // namespace

std::optional<SeparationWitness> separates(const LabelledComplex& k,
                                           const std::set<std::string>& r) {
  // Kind is the caller's business; the bare check reports the split only.
  return separates_mask(k, k.mask_of(r),
                        SeparationWitness::Kind::Disconnected);
}

std::vector<SeparationWitness> separating_simplices(const LabelledComplex& k) {
  std::vector<SeparationWitness> out;
  for (Subset s : k.simplex_masks())
    if (auto w = separates_mask(k, s, SeparationWitness::Kind::SeparatingSimplex))
      out.push_back(std::move(*w));
  return out;
}

std::vector<SeparationWitness> separating_pairs(const LabelledComplex& k) {
  std::vector<SeparationWitness> out;
  const int n = k.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const Subset pair = (Subset{1} << u) | (Subset{1} << v);
      if (k.contains_mask(pair)) continue;
      if (auto w = separates_mask(k, pair, SeparationWitness::Kind::SeparatingPair))
        out.push_back(std::move(*w));
    }
  return out;
}

std::vector<SeparationWitness> separating_suspensions(
    const LabelledComplex& k) {
  std::vector<SeparationWitness> out;
  std::set<Subset> seen;
  for (const LabelledSuspension& s : find_labelled_suspensions(k)) {
    if (s.simplex.empty()) continue;  // counted under separating pairs
    Subset removed = k.mask_of(s.simplex);
    removed |= Subset{1} << k.vertex_index(s.u);
    removed |= Subset{1} << k.vertex_index(s.v);
    if (!seen.insert(removed).second) continue;
    if (auto w = separates_mask(k, removed,
                                SeparationWitness::Kind::SeparatingSuspension))
      out.push_back(std::move(*w));
  }
  return out;
}

UnseparabilityResult is_unseparable(const LabelledComplex& k) {
  const auto components = connected_component_masks(k);
  if (components.size() != 1) {
    SeparationWitness w;
    w.kind = SeparationWitness::Kind::Disconnected;
    for (Subset comp : components) w.components.push_back(k.names_of(comp));
    return {false, std::move(w)};
  }
  if (auto simplices = separating_simplices(k); !simplices.empty())
    return {false, std::move(simplices.front())};
  if (auto pairs = separating_pairs(k); !pairs.empty())
    return {false, std::move(pairs.front())};
  if (auto suspensions = separating_suspensions(k); !suspensions.empty())
    return {false, std::move(suspensions.front())};
  return {true, std::nullopt};
}

}  // namespace nervecheck

// Planarity of 2-complexes: a complex is planar when its 1-skeleton embeds
// in the plane so that every 2-simplex bounds its own face, with distinct
// faces for distinct 2-simplices and at least one face left over. A full
// triangulation of the 2-sphere is therefore not planar.
#pragma once

#include <cstdint>
#include <map>

#include "nervecheck/simplicial.hpp"

namespace nervecheck {

struct PlanarityCertificate {
  enum class Obstruction {
    None,
    Dim3Plus,
    EdgeInThreeTriangles,
    NonplanarGraph,
    NoFaceAssignment,
    IsWholeSphere,
  };

  bool verdict = false;
  Obstruction obstruction = Obstruction::None;

  // Embedding evidence, present when verdict is true: a rotation system
  // (cyclic neighbor order per vertex), the traced faces, and for each
  // 2-simplex the face it bounds.
  std::map<std::string, std::vector<std::string>> rotation;
  std::vector<std::vector<std::string>> faces;
  std::map<std::vector<std::string>, int> triangle_faces;
};

const char* to_string(PlanarityCertificate::Obstruction o);

// Thrown when the embedding search runs out of nodes; carries whatever
// certificate fragment existed at that point.
class SearchBudgetError : public Error {
 public:
  SearchBudgetError(const std::string& message, PlanarityCertificate partial)
      : Error(Errc::SearchBudgetExceeded, message),
        partial_certificate(std::move(partial)) {}

  PlanarityCertificate partial_certificate;
};

inline constexpr std::uint64_t kDefaultPlanarityBudget = 10'000'000;

// Classical graph planarity of the 1-skeleton.
bool is_planar_graph(const LabelledComplex& k);

PlanarityCertificate is_planar_complex(
    const LabelledComplex& k,
    std::uint64_t budget = kDefaultPlanarityBudget);

// Reference oracle: exhaustive search over all rotation systems of the
// 1-skeleton, component by component. Only for complexes with at most 8
// vertices (throws TooLarge beyond that or when the rotation space is
// unreasonably large even under that bound).
bool brute_force_planar(const LabelledComplex& k);

// Re-traces the certificate's rotation system and confirms every claim in
// it against k. Used by tests and by is_planar_complex itself.
bool verify_planarity_certificate(const LabelledComplex& k,
                                  const PlanarityCertificate& cert);

}  // namespace nervecheck

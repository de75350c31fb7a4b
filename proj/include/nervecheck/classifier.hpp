// The boundary classifier: maps a Coxeter matrix to the homeomorphism type
// of the Gromov boundary (where the theory pins it down) with a full
// evidence trail.
#pragma once

#include "nervecheck/cohomology.hpp"
#include "nervecheck/hyperbolicity.hpp"
#include "nervecheck/planarity.hpp"
#include "nervecheck/separability.hpp"

namespace nervecheck {

enum class BoundaryClass {
  NotHyperbolic,
  EmptyBoundary,
  TwoPoints,
  MultiEnded,
  Circle,
  Sphere2,
  Sierpinski,
  Menger,
  OneEndedWithLocalCutPoints,
  OtherHigherDimensional,
};

const char* to_string(BoundaryClass c);
std::optional<BoundaryClass> boundary_class_from_string(const std::string& s);

struct FactorReport {
  GeneratorSet members;
  bool spherical = false;
};

struct ClassificationReport {
  // Input echo.
  std::vector<std::string> generator_names;
  std::vector<std::vector<Label>> matrix;

  BoundaryClass boundary_class = BoundaryClass::NotHyperbolic;
  std::optional<int> boundary_dim;

  HyperbolicityVerdict hyperbolicity;
  std::vector<FactorReport> factors;
  GeneratorSet core_generators;             // empty when no infinite factor
  std::vector<int> nerve_simplex_counts;    // of the core nerve, per dim
  std::optional<UnseparabilityResult> unseparability;
  std::optional<PlanarityCertificate> planarity;
  std::optional<PcdResult> pcd_result;
  std::vector<std::string> notes;
};

// Splits off the finite product factors: the restriction to the union of
// the infinite factors (nothing when the whole group is finite) plus the
// generators of the finite part.
std::pair<std::optional<CoxeterMatrix>, GeneratorSet> strip_finite_factors(
    const CoxeterMatrix& m);

struct ClassifyOptions {
  int max_rank = kDefaultMaxRank;
  std::uint64_t planarity_budget = kDefaultPlanarityBudget;
};

// Raised when the planarity search inside classify runs out of budget;
// carries the stages that did complete.
class ClassifyBudgetError : public SearchBudgetError {
 public:
  ClassifyBudgetError(const SearchBudgetError& cause,
                      ClassificationReport report)
      : SearchBudgetError(cause.what(), cause.partial_certificate),
        partial_report(std::move(report)) {}

  ClassificationReport partial_report;
};

ClassificationReport classify(const CoxeterMatrix& m,
                              const ClassifyOptions& options = {});

}  // namespace nervecheck

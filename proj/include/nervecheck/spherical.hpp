// Finiteness of special subgroups: exact classification of connected
// labelled diagrams against the finite and affine tables, plus the
// cosine-matrix definiteness oracle used to cross-check the tables.
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>

#include "nervecheck/coxeter.hpp"

namespace nervecheck {

enum class FiniteFamily { A, B, D, E6, E7, E8, F4, H3, H4, I2 };
enum class AffineFamily { A, B, C, D, E6, E7, E8, F4, G2 };

struct IrreducibleTypeTag {
  enum class Kind { Finite, Affine, Indefinite };

  Kind kind = Kind::Indefinite;
  FiniteFamily finite_family = FiniteFamily::A;
  AffineFamily affine_family = AffineFamily::A;
  int rank = 0;       // finite: generator count; affine: the subscript n
  int dihedral_m = 0; // I2(m) only

  static IrreducibleTypeTag finite(FiniteFamily f, int rank, int m = 0) {
    IrreducibleTypeTag t;
    t.kind = Kind::Finite;
    t.finite_family = f;
    t.rank = rank;
    t.dihedral_m = m;
    return t;
  }
  static IrreducibleTypeTag affine(AffineFamily f, int subscript) {
    IrreducibleTypeTag t;
    t.kind = Kind::Affine;
    t.affine_family = f;
    t.rank = subscript;
    return t;
  }
  static IrreducibleTypeTag indefinite() { return IrreducibleTypeTag{}; }

  bool is_finite_type() const { return kind == Kind::Finite; }
  bool is_affine_type() const { return kind == Kind::Affine; }

  // "A3", "I2(7)", "~A2", "Indefinite".
  std::string str() const;

  friend bool operator==(const IrreducibleTypeTag& a,
                         const IrreducibleTypeTag& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Finite:
        return a.finite_family == b.finite_family && a.rank == b.rank &&
               a.dihedral_m == b.dihedral_m;
      case Kind::Affine:
        return a.affine_family == b.affine_family && a.rank == b.rank;
      case Kind::Indefinite:
        return true;
    }
    return false;
  }
};

// Classify one connected diagram component (throws NotConnected otherwise).
// I2(3) and I2(4) come back canonicalized as A2 and B2.
IrreducibleTypeTag classify_irreducible(const CoxeterMatrix& m,
                                        const GeneratorSet& subset);
IrreducibleTypeTag classify_irreducible_mask(const CoxeterMatrix& m,
                                             Subset subset);

// True iff the special subgroup generated by `subset` is finite
// (empty set allowed: the trivial group is finite).
bool is_spherical(const CoxeterMatrix& m, const GeneratorSet& subset);
bool is_spherical_mask(const CoxeterMatrix& m, Subset subset);

// Per-matrix memo for is_spherical. Reads are thread safe; fills are
// idempotent, so concurrent fills of the same key are harmless.
class SphericalOracle {
 public:
  explicit SphericalOracle(CoxeterMatrix matrix) : matrix_(std::move(matrix)) {}

  const CoxeterMatrix& matrix() const { return matrix_; }
  bool is_spherical(Subset mask) const;
  bool is_spherical(const GeneratorSet& subset) const {
    return is_spherical(matrix_.mask_of(subset));
  }

 private:
  CoxeterMatrix matrix_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Subset, bool> memo_;
};

// The symmetric bilinear form with entries -cos(pi/m) (inf pairs -> -1),
// unit diagonal. Positive definite exactly for finite subgroups.
Eigen::MatrixXd cosine_matrix(const CoxeterMatrix& m,
                              const GeneratorSet& subset);

enum class Definiteness { PositiveDefinite, SemidefiniteCorank1, Other };

// Verdict from eigenvalue signs with tolerance `tol` around zero.
Definiteness definiteness(const Eigen::MatrixXd& b, double tol = 1e-9);

const char* to_string(Definiteness d);

}  // namespace nervecheck

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitopes/matrix.hpp"
#include "orbitopes/momentum_polytope.hpp"
#include "orbitopes/rng.hpp"
#include "orbitopes/root_system.hpp"

namespace orbitopes {

/// The classical polar-orbitope catalog. Naming follows the model
/// spaces: rectangular matrices over R/C/H under u x v*, square real
/// matrices under SO(n) x SO(n) (the exceptional m = n real case),
/// hermitian matrices under conjugation, skew-hermitian matrices over
/// R/H, and (skew-)symmetric complex matrices under g x g^t.
enum class FamilyTag {
  RectReal,
  RectComplex,
  RectQuat,
  SquareRealSpecial,
  HermReal,
  HermComplex,
  HermQuat,
  SkewReal,
  SkewQuat,
  SymComplex,
  SkewSymComplex,
};

std::string family_tag_name(FamilyTag tag);
FamilyTag family_tag_from_name(const std::string& name);

struct OrbitopeFamily {
  FamilyTag tag{};
  int m = 0;  // rows (rect families); equal to n for square families
  int n = 0;  // cols / matrix size
  Field field = Field::R;
  int model_rows = 0, model_cols = 0;
  RootFamily root_family = RootFamily::A;
  int rank = 0;
  int ambient = 0;
  /// Trace-form norm^2 of a unit a-coordinate: 1 for diagonal
  /// embeddings, 2 for 2x2-block embeddings.
  double scale = 1.0;
  /// Whether the underlying Lie algebra is simple (false for
  /// SquareRealSpecial n=2 and SkewReal n=4).
  bool simple_algebra = true;

  RestrictedRootSystem system() const { return RestrictedRootSystem::make(root_family, rank); }
  bool is_herm_family() const {
    return tag == FamilyTag::HermReal || tag == FamilyTag::HermComplex ||
           tag == FamilyTag::HermQuat;
  }
  std::string name() const { return family_tag_name(tag); }
};

/// Validates dimensions and derives the root-system data.
OrbitopeFamily make_family(FamilyTag tag, int m, int n);

/// Dominant a-coordinates of a model-space element, together with the
/// (reduced) trace for hermitian families, where the a-vector is
/// centered to the zero-sum hyperplane.
struct ACoords {
  std::vector<double> v;
  double trace = 0;
};

class OrbitopeSpec {
 public:
  static OrbitopeSpec from_a_coords(const OrbitopeFamily& fam, std::vector<double> x);
  static OrbitopeSpec from_a_coords_exact(const OrbitopeFamily& fam, std::vector<Rational> x);
  static OrbitopeSpec from_matrix(const OrbitopeFamily& fam, const DenseMatrix& x);

  const OrbitopeFamily& family() const { return fam_; }
  /// Dominant base point in a-coordinates (centered for Herm*).
  const std::vector<double>& x() const { return x_; }
  const std::optional<std::vector<Rational>>& x_exact() const { return x_exact_; }
  /// Reduced trace of the base point; zero except for Herm*.
  double trace() const { return trace_; }
  std::optional<Rational> trace_exact() const { return trace_exact_; }

  RestrictedRootSystem system() const { return fam_.system(); }
  MomentumPolytope<double> polytope() const { return {system(), x_}; }

  /// beta_j(x) values (exact when the base point is exact).
  std::vector<double> beta_values() const { return system().simple_root_values(x_); }

 private:
  OrbitopeFamily fam_;
  std::vector<double> x_;
  std::optional<std::vector<Rational>> x_exact_;
  double trace_ = 0;
  std::optional<Rational> trace_exact_;
};

/// Chamber data of a model-space element: Rect*/Sym* singular values,
/// SquareRealSpecial det-signed singular values, Herm* centered
/// eigenvalues, Skew* halved spectra (Pfaffian-signed for even SkewReal).
ACoords a_coordinates(const OrbitopeFamily& fam, const DenseMatrix& y);

/// Orthogonal projection onto a, returned in a-coordinates (raw
/// functional read-off; not dominized, and not centered for Herm*).
std::vector<double> project_to_a(const OrbitopeFamily& fam, const DenseMatrix& y);

/// Diagonal/block embedding iota: a -> model space, left inverse of
/// project_to_a. For Herm* the input is the full (uncentered) spectrum.
DenseMatrix embed_a(const OrbitopeFamily& fam, const std::vector<double>& v);

enum class Verdict { Inside, Boundary, Outside };

std::string verdict_name(Verdict v);

struct MembershipResult {
  Verdict verdict = Verdict::Outside;
  /// Worst slack: positive means violated, negative means strict margin.
  double worst_slack = 0;
  std::string worst_constraint;
  double tolerance = 0;
};

/// Exact membership oracle via the family's Kostant inequalities
/// mu_j(a(y)) <= mu_j(x), plus trace equality for Herm*.
MembershipResult membership(const OrbitopeSpec& spec, const DenseMatrix& y, double eps = 1e-8);

/// Support function h(d) = max_{g} <g x, d> = s * <x, a(d)> through the
/// dominance pairing; Herm* adds the trace offset (tr x)(tr d)/n.
double support_function(const OrbitopeSpec& spec, const DenseMatrix& d);

/// Deterministic orbit samples g x h* / g x g* / g x g^t per family,
/// with the group factors drawn via QR of Gaussian ensembles.
std::vector<DenseMatrix> orbit_sample(const OrbitopeSpec& spec, int count, std::uint64_t seed);

/// Haar-like samples of the classical groups (QR of Gaussian ensembles,
/// orthogonal factors corrected to det +1).
DenseMatrix haar_orthogonal(int n, Rng& rng);   // SO(n), field R
DenseMatrix haar_unitary(int n, Rng& rng);      // U(n),  field C
DenseMatrix haar_symplectic(int n, Rng& rng);   // Sp(n), field H

/// Gaussian element of the family's model space (symmetry respected).
DenseMatrix random_model_element(const OrbitopeFamily& fam, Rng& rng);

/// Shape/symmetry validation used by all catalog entry points.
void validate_model_element(const OrbitopeFamily& fam, const DenseMatrix& y,
                            double rel_tol = 1e-9);

/// Canonical real coordinates of the model space. Entries are walked in
/// row-major order over the free positions (diagonal plus upper triangle
/// for symmetric-type families) and each free quaternion component is
/// emitted in [1, i, j, k] order; basis elements have unit entries. The
/// order is fixed so exported pencil variables are stable.
int model_dimension(const OrbitopeFamily& fam);
DenseMatrix model_basis_element(const OrbitopeFamily& fam, int index);
std::vector<double> model_coordinates(const OrbitopeFamily& fam, const DenseMatrix& y);
DenseMatrix model_from_coordinates(const OrbitopeFamily& fam, const std::vector<double>& coords);

/// Base point embedded back into the model space.
DenseMatrix base_matrix(const OrbitopeSpec& spec);

}  // namespace orbitopes

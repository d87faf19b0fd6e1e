#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orbitopes/matrix.hpp"
#include "orbitopes/orbitope.hpp"

namespace orbitopes {

/// One hermitian block of an LMI. Feasibility of a point y means
/// slack(y) = level * I - rep(y) is positive semidefinite; rep is linear
/// in y. Materialization stores the slack map as coefficient matrices
/// A_0 (+ level I) and A_i = -rep(basis_i) over the model coordinates.
struct PencilBlock {
  int size = 0;
  std::string kind;  // "exterior_k", "half_spin_plus/minus", "trace_plus/minus"
  double level = 0;
  std::function<CMat(const DenseMatrix&)> rep;
  std::vector<CMat> coeffs;  // materialized: [A_0, A_1, ..., A_d]
  bool real_symmetric = false;

  /// Slack matrix level * I - rep(y).
  CMat evaluate(const DenseMatrix& y) const;
  double min_slack_eigenvalue(const DenseMatrix& y) const;
};

/// Affine hermitian-matrix pencil over the real coordinates of a model
/// space. Lazy by default; materialize() fills per-block coefficient
/// matrices, realify() converts every block to the real symmetric
/// doubling [[P, -Q], [Q, P]].
class LinearPencil {
 public:
  LinearPencil() = default;
  LinearPencil(OrbitopeFamily model, std::vector<PencilBlock> blocks)
      : model_(std::move(model)), blocks_(std::move(blocks)) {}

  const OrbitopeFamily& model() const { return model_; }
  const std::vector<PencilBlock>& blocks() const { return blocks_; }
  int dimension() const { return model_dimension(model_); }
  bool materialized() const { return materialized_; }
  bool realified() const { return realified_; }

  /// Worst slack eigenvalue over all blocks (negative = infeasible) and
  /// the block that attains it.
  struct Feasibility {
    double min_eigenvalue = 0;
    int worst_block = -1;
    std::string worst_kind;
  };
  Feasibility feasibility(const DenseMatrix& y) const;
  bool feasible(const DenseMatrix& y, double eps = 1e-9) const;

  /// Computes coefficient matrices for every block.
  void materialize();

  /// Hermitian H = P + iQ becomes [[P, -Q], [Q, P]]; feasibility is
  /// preserved and every eigenvalue doubles its multiplicity.
  LinearPencil realify() const;

  /// SDPA sparse export (".dat-s"); requires materialized + realified.
  void export_sdpa(const std::string& path) const;
  std::string sdpa_string() const;

 private:
  OrbitopeFamily model_;
  std::vector<PencilBlock> blocks_;
  bool materialized_ = false;
  bool realified_ = false;
};

/// Realification helper [[P, -Q], [Q, P]] of a hermitian complex matrix.
CMat realify_hermitian(const CMat& h);

/// Ky Fan ball {y : ||y||_k <= radius} in M_{m x n}(field) as a single
/// exterior-power block of the hermitian dilation; quaternion input is
/// routed through the complex embedding (doubling sizes and levels).
LinearPencil ky_fan_ball_pencil(Field field, int m, int n, int k, double radius,
                                long long size_cap = 20000);

/// Spectrahedral representation of the orbitope: one block per facet
/// index of P_x (exterior powers of the family's hermitian carrier;
/// half-spin blocks for the two D-type end nodes), plus a trace-equality
/// pair for hermitian families.
LinearPencil orbitope_pencil(const OrbitopeSpec& spec, long long size_cap = 20000);

/// The block realizing the j-th (0-based) fundamental constraint of the
/// family: the largest eigenvalue of rep(y) equals
///   mu_multiplier * mu_j(a(y))  +  trace_coeff * tr(y)
/// (the trace term only appears for hermitian families with uncentered
/// carriers; `centered` subtracts tr(y)/n * I inside the carrier).
struct FundamentalBlock {
  PencilBlock block;
  double mu_multiplier = 1;
  double trace_coeff = 0;
};
FundamentalBlock fundamental_block(const OrbitopeFamily& fam, int j, bool centered,
                                   long long size_cap = 20000);

/// Round-trip reader for the SDPA sparse format (validation tool).
struct SdpaData {
  int variables = 0;
  std::vector<int> block_sizes;
  // F matrices: index 0 is F_0; entries only in the upper triangle.
  std::vector<std::vector<RMat>> f;  // f[i][b]
};
SdpaData parse_sdpa(const std::string& text);

}  // namespace orbitopes

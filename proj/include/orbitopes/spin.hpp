#pragma once

#include <memory>
#include <vector>

#include "orbitopes/matrix.hpp"
#include "orbitopes/pencil.hpp"

namespace orbitopes {

/// Gamma matrices of the even Clifford algebra Cl(N), realized as Pauli
/// tensor products: gamma_{2a-1} = sz^(a-1) x sx x 1..., gamma_{2a} =
/// sz^(a-1) x sy x 1... Each gamma has exactly one nonzero entry per
/// column, which keeps spin evaluation sparse. The chirality operator is
/// diagonal: sz^(n) with entry (-1)^popcount(index).
class CliffordBasis {
 public:
  /// N even; the spinor dimension 2^{N/2} must stay within dim_cap.
  static CliffordBasis build(int N, int dim_cap = 1 << 10);

  int N() const { return N_; }
  int spinor_dim() const { return dim_; }

  CMat gamma_dense(int a) const;       // 0-based
  CMat chirality_dense() const;
  /// Split-to-standard change of basis T for so(n,n) input (N = 2n):
  /// columns (e_i + i e_{n+i})/sqrt2 and (e_i - i e_{n+i})/sqrt2,
  /// interleaved, so that chamber diagonals map onto the Cartan pairs.
  const CMat& split_to_standard() const { return T_; }

  /// Full spin representation 1/4 sum Z_ab [gamma_a, gamma_b] of a
  /// complex skew-symmetric Z (N x N).
  CMat spin(const CMat& z) const;

  /// Chirality block of spin(z); sign +1 takes the even-parity block.
  /// For a chamber vector v theblocks' spectra are the half-sums
  /// (+-v_1 +- ... +- v_n)/2 over sign patterns of even (+) resp. odd
  /// (-) minus count.
  CMat half_spin_standard(const CMat& z, int sign) const;

  /// Half-spin of a p-element of so(n,n): X = [[0, w], [w^t, 0]]
  /// (2n x 2n real symmetric with vanishing diagonal blocks). X is
  /// conjugated by T into standard so(2n, C) first.
  CMat half_spin_split(const CMat& x, int sign) const;

  /// Basis indices of the +/- chirality blocks (even/odd parity).
  const std::vector<int>& block_indices(int sign) const {
    return sign > 0 ? even_ : odd_;
  }

 private:
  struct SparseUnit {
    // column c has single nonzero at row[c] with value phase[c]
    std::vector<int> row;
    std::vector<cxd> phase;
  };
  static SparseUnit mul(const SparseUnit& a, const SparseUnit& b);

  int N_ = 0;
  int dim_ = 0;
  std::vector<SparseUnit> gamma_;
  std::vector<int> even_, odd_;
  CMat T_;
};

/// Shared Clifford bases keyed by N (they are immutable and sizable).
std::shared_ptr<const CliffordBasis> clifford_basis(int N, int dim_cap = 1 << 10);

/// conv SO(n) as the two-block pencil: operator-norm dilation at level 1
/// and the rho_{n-1} half-spin block at level (n-2)/2.
LinearPencil conv_so_pencil(int n, long long size_cap = 20000);

/// (conv SO(n))^o as the single half-spin block rho_n(y-hat) <= 1/2.
LinearPencil so_polar_pencil(int n, long long size_cap = 20000);

}  // namespace orbitopes

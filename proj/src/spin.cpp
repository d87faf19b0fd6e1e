#include "orbitopes/spin.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "orbitopes/coorbitope.hpp"

namespace orbitopes {

CliffordBasis::SparseUnit CliffordBasis::mul(const SparseUnit& a, const SparseUnit& b) {
  SparseUnit out;
  out.row.resize(b.row.size());
  out.phase.resize(b.row.size());
  for (std::size_t c = 0; c < b.row.size(); ++c) {
    out.row[c] = a.row[b.row[c]];
    out.phase[c] = a.phase[b.row[c]] * b.phase[c];
  }
  return out;
}

CliffordBasis CliffordBasis::build(int N, int dim_cap) {
  if (N < 2 || N % 2 != 0) throw ShapeMismatch("Clifford construction needs even N >= 2");
  int slots = N / 2;
  if (slots >= 31 || (1 << slots) > dim_cap) {
    throw SizeCapExceeded("spinor dimension 2^" + std::to_string(slots) + " exceeds cap " +
                          std::to_string(dim_cap));
  }
  CliffordBasis basis;
  basis.N_ = N;
  basis.dim_ = 1 << slots;
  const int dim = basis.dim_;

  // Index bit b_a (from the left: slot a uses bit slots-1-a) selects the
  // Pauli component; sx flips the bit, sy flips with phase +-i, sz is
  // diagonal (-1)^bit.
  for (int a = 0; a < slots; ++a) {
    int bit = slots - 1 - a;
    SparseUnit gx, gy;
    gx.row.resize(dim);
    gx.phase.resize(dim);
    gy.row.resize(dim);
    gy.phase.resize(dim);
    for (int col = 0; col < dim; ++col) {
      // sz factors on slots before a: product of (-1)^bit over higher slots.
      double sz = 1.0;
      for (int p = 0; p < a; ++p) {
        if (col & (1 << (slots - 1 - p))) sz = -sz;
      }
      int flipped = col ^ (1 << bit);
      gx.row[col] = flipped;
      gx.phase[col] = sz;
      gy.row[col] = flipped;
      // sy = [[0, -i], [i, 0]]: column 0 -> i at row 1, column 1 -> -i at row 0.
      bool was_set = (col & (1 << bit)) != 0;
      gy.phase[col] = sz * (was_set ? cxd(0, -1) : cxd(0, 1));
    }
    basis.gamma_.push_back(std::move(gx));
    basis.gamma_.push_back(std::move(gy));
  }

  for (int idx = 0; idx < dim; ++idx) {
    int pop = __builtin_popcount(static_cast<unsigned>(idx));
    (pop % 2 == 0 ? basis.even_ : basis.odd_).push_back(idx);
  }

  // T: interleaved columns (e_i + i e_{n+i})/sqrt2, (e_i - i e_{n+i})/sqrt2.
  int n = N / 2;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  basis.T_ = CMat(N, N);
  for (int i = 0; i < n; ++i) {
    basis.T_.at(i, 2 * i) = inv_sqrt2;
    basis.T_.at(n + i, 2 * i) = cxd(0, inv_sqrt2);
    basis.T_.at(i, 2 * i + 1) = inv_sqrt2;
    basis.T_.at(n + i, 2 * i + 1) = cxd(0, -inv_sqrt2);
  }
  return basis;
}

CMat CliffordBasis::gamma_dense(int a) const {
  CMat out(dim_, dim_);
  for (int c = 0; c < dim_; ++c) out.at(gamma_[a].row[c], c) = gamma_[a].phase[c];
  return out;
}

CMat CliffordBasis::chirality_dense() const {
  CMat out(dim_, dim_);
  for (int idx = 0; idx < dim_; ++idx) {
    int pop = __builtin_popcount(static_cast<unsigned>(idx));
    out.at(idx, idx) = (pop % 2 == 0) ? 1.0 : -1.0;
  }
  return out;
}

CMat CliffordBasis::spin(const CMat& z) const {
  if (z.rows() != N_ || z.cols() != N_) {
    throw ShapeMismatch("spin expects an N x N matrix with N = " + std::to_string(N_));
  }
  double norm = z.frobenius();
  if ((z + z.transpose()).frobenius() > 1e-9 * std::max(1.0, norm)) {
    throw ShapeMismatch("spin expects a complex skew-symmetric matrix");
  }
  CMat out(dim_, dim_);
  for (int a = 0; a < N_; ++a) {
    for (int b = a + 1; b < N_; ++b) {
      cxd zab = 0.5 * (z.at(a, b) - z.at(b, a));
      if (zab == cxd(0)) continue;
      SparseUnit prod = mul(gamma_[a], gamma_[b]);
      // 1/4 [gamma_a, gamma_b] = 1/2 gamma_a gamma_b for a != b.
      for (int c = 0; c < dim_; ++c) {
        out.at(prod.row[c], c) += 0.5 * zab * prod.phase[c];
      }
    }
  }
  return out;
}

CMat CliffordBasis::half_spin_standard(const CMat& z, int sign) const {
  CMat full = spin(z);
  const auto& idx = block_indices(sign);
  CMat out(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = full.at(idx[i], idx[j]);
  return out;
}

CMat CliffordBasis::half_spin_split(const CMat& x, int sign) const {
  if (x.rows() != N_ || x.cols() != N_) {
    throw ShapeMismatch("half_spin_split expects a " + std::to_string(N_) + "-dim matrix");
  }
  // Validate the p-shape of so(n,n): symmetric with zero diagonal blocks.
  int n = N_ / 2;
  double norm = std::max(1.0, x.frobenius());
  if ((x - x.conj_transpose()).frobenius() > 1e-9 * norm) {
    throw ShapeMismatch("so(n,n) p-element must be symmetric");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(x.at(i, j)) > 1e-9 * norm || std::abs(x.at(n + i, n + j)) > 1e-9 * norm) {
        throw ShapeMismatch("so(n,n) p-element must have vanishing diagonal blocks");
      }
    }
  }
  CMat z = T_.conj_transpose() * x * T_;
  return half_spin_standard(z, sign);
}

namespace {
std::map<int, std::shared_ptr<const CliffordBasis>> g_basis_cache;
std::mutex g_basis_mutex;
}  // namespace

std::shared_ptr<const CliffordBasis> clifford_basis(int N, int dim_cap) {
  std::lock_guard<std::mutex> lock(g_basis_mutex);
  auto it = g_basis_cache.find(N);
  if (it != g_basis_cache.end()) return it->second;
  auto basis = std::make_shared<const CliffordBasis>(CliffordBasis::build(N, dim_cap));
  g_basis_cache[N] = basis;
  return basis;
}

LinearPencil conv_so_pencil(int n, long long size_cap) {
  if (n < 3) throw ShapeMismatch("conv SO(n) pencil needs n >= 3");
  auto fam = make_family(FamilyTag::SquareRealSpecial, n, n);
  // The two inequalities of the identity-orbit description: operator
  // norm at level 1 and the rho_{n-1} half-spin block at level (n-2)/2.
  // For n >= 4 these are exactly the facet blocks of orbitope_pencil;
  // at n = 3 the operator block is kept although it is redundant there.
  std::vector<PencilBlock> blocks;
  FundamentalBlock op = fundamental_block(fam, 0, false, size_cap);
  op.block.level = 1.0;
  blocks.push_back(std::move(op.block));
  FundamentalBlock hs = fundamental_block(fam, n - 2, false, size_cap);
  hs.block.level = (n - 2) / 2.0;
  blocks.push_back(std::move(hs.block));
  return LinearPencil(fam, std::move(blocks));
}

LinearPencil so_polar_pencil(int n, long long size_cap) {
  if (n < 3) throw ShapeMismatch("SO(n) polar pencil needs n >= 3");
  auto fam = make_family(FamilyTag::SquareRealSpecial, n, n);
  auto spec = OrbitopeSpec::from_a_coords_exact(fam, std::vector<Rational>(n, Rational(1)));
  return polar_pencil(spec, size_cap);
}

}  // namespace orbitopes

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "orbitopes/errors.hpp"
#include "orbitopes/rational.hpp"

namespace orbitopes {

enum class Field { R, C, H };

std::string field_name(Field f);

using cxd = std::complex<double>;

namespace detail {
inline double conj_value(double v) { return v; }
inline cxd conj_value(const cxd& v) { return std::conj(v); }
inline Rational conj_value(const Rational& v) { return v; }
inline double abs_value(double v) { return std::abs(v); }
inline double abs_value(const cxd& v) { return std::abs(v); }
inline double abs_value(const Rational& v) { return std::abs(v.to_double()); }
}  // namespace detail

/// Minimal dense storage; row-major.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  const std::vector<T>& data() const { return e_; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
    return out;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
    return out;
  }
  friend Mat operator*(const T& s, const Mat& a) {
    Mat out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = s * a.e_[i];
    return out;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        T aik = a.at(i, k);
        if (detail::abs_value(aik) == 0.0) continue;
        for (int j = 0; j < b.cols_; ++j) out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
      }
    }
    return out;
  }

  Mat conj_transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = detail::conj_value(at(i, j));
    return out;
  }

  Mat transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  double frobenius() const {
    double s = 0;
    for (const T& v : e_) {
      double a = detail::abs_value(v);
      s += a * a;
    }
    return std::sqrt(s);
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using CMat = Mat<cxd>;
using RMat = Mat<double>;

/// Dense matrix over R, C or H. Quaternion entries are stored as the
/// complex pair (alpha, beta) with q = alpha + j*beta; the component
/// vector [a,b,c,d] of q = a + bi + cj + dk maps to alpha = a + bi,
/// beta = c - di. For R and C the beta part is empty.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  static DenseMatrix zero(Field f, int rows, int cols);
  static DenseMatrix real(RMat m);
  static DenseMatrix complex_matrix(CMat m);
  static DenseMatrix quaternion(CMat alpha, CMat beta);

  Field field() const { return field_; }
  int rows() const { return a_.rows(); }
  int cols() const { return a_.cols(); }

  const CMat& alpha() const { return a_; }
  const CMat& beta() const { return b_; }
  CMat& alpha() { return a_; }
  CMat& beta() { return b_; }

  /// Components [a,b,c,d] of the (r,c) entry; b=c=d vanish over R, c=d over C.
  void entry_components(int r, int c, double out[4]) const;
  void set_entry(int r, int c, const double comp[4]);

  friend DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator*(double s, const DenseMatrix& x);
  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);

  DenseMatrix conj_transpose() const;
  DenseMatrix transpose() const;

  double frobenius() const;

  /// Real trace-form pairing Re trace(x* y) = sum of componentwise products.
  static double trace_form(const DenseMatrix& x, const DenseMatrix& y);

  /// Real part of the (reduced, for H) trace.
  double re_trace() const;

  bool is_hermitian(double rel_tol = 1e-12) const;
  bool is_skew_hermitian(double rel_tol = 1e-9) const;

 private:
  Field field_ = Field::R;
  CMat a_;
  CMat b_;
};

/// Eigenvalues, or singular values, sorted descending.
struct Spectrum {
  std::vector<double> values;
};

/// All eigenvalues of a complex hermitian matrix, descending, via cyclic
/// Jacobi rotations. Off-diagonal mass is driven below 1e-12 * ||A||_F.
std::vector<double> eig_hermitian_values(const CMat& a);

/// Spectrum of a hermitian DenseMatrix over R or C. Quaternion input
/// must be routed through embed_quaternion first.
Spectrum eig_hermitian(const DenseMatrix& a);

/// Widens an R or C matrix to complex storage.
CMat complexify(const DenseMatrix& x);

/// Hermitian dilation (0 x; x* 0) of an m x n matrix over R or C.
DenseMatrix hermitian_dilation(const DenseMatrix& x);
CMat hermitian_dilation_c(const CMat& x);

/// Complex embedding of a quaternion matrix, (A1 -conj(A2); A2 conj(A1)).
/// Hermitian input yields a hermitian output with doubled spectrum.
DenseMatrix embed_quaternion(const DenseMatrix& a);

/// Singular values, descending. Computed as the nonnegative half of the
/// dilation spectrum; quaternions are embedded and the doubled
/// multiplicities halved.
Spectrum singular_values(const DenseMatrix& x);

/// k-th Ky Fan norm: sigma_1 + ... + sigma_k.
double ky_fan_norm(const DenseMatrix& x, int k);

/// Additive k-th exterior power of a hermitian N x N matrix on the
/// lexicographic k-subset basis. Eigenvalues are the k-fold sums of the
/// eigenvalues of A. Throws SizeCapExceeded when C(N,k) > size_cap.
template <typename T>
Mat<T> exterior_power_additive(const Mat<T>& a, int k, long long size_cap = 20000);

/// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// C(n,k) guarded against overflow; values above `cap` report cap+1.
long long binomial_capped(int n, int k, long long cap);

/// Sign of the Pfaffian of a real skew-symmetric matrix of even size,
/// via skew elimination with pivoting; 0 when singular within
/// tol_scale * ||A||_F.
int pfaffian_sign(const RMat& a, double tol_scale = 1e-10);

/// Sign of det(A) via LU with partial pivoting; 0 when singular.
int det_sign(const RMat& a, double tol_scale = 1e-12);

template <typename T>
Mat<T> exterior_power_additive(const Mat<T>& a, int k, long long size_cap) {
  if (a.rows() != a.cols()) throw ShapeMismatch("exterior power needs a square matrix");
  const int n = a.rows();
  if (k < 1 || k > n) throw ShapeMismatch("exterior power index out of range");
  long long dim = binomial_capped(n, k, size_cap);
  if (dim > size_cap) {
    throw SizeCapExceeded("exterior power dimension C(" + std::to_string(n) + "," +
                          std::to_string(k) + ") exceeds cap " + std::to_string(size_cap));
  }
  auto subsets = k_subsets(n, k);
  // Subset index lookup by bitmask (n <= 62 whenever the cap is met).
  std::vector<std::uint64_t> masks(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    std::uint64_t m = 0;
    for (int v : subsets[s]) m |= (std::uint64_t{1} << v);
    masks[s] = m;
  }
  std::vector<std::size_t> order(subsets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t p, std::size_t q) { return masks[p] < masks[q]; });
  std::vector<std::uint64_t> sorted_masks(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted_masks[i] = masks[order[i]];
  auto index_of = [&](std::uint64_t mask) {
    auto it = std::lower_bound(sorted_masks.begin(), sorted_masks.end(), mask);
    return order[static_cast<std::size_t>(it - sorted_masks.begin())];
  };

  Mat<T> out(static_cast<int>(dim), static_cast<int>(dim));
  for (std::size_t col = 0; col < subsets.size(); ++col) {
    const auto& I = subsets[col];
    // Diagonal: sum of A_ii over I.
    T diag{};
    for (int i : I) diag = diag + a.at(i, i);
    out.at(static_cast<int>(col), static_cast<int>(col)) = diag;
    // Off-diagonal: replace a in I by b not in I; the sign is the parity
    // of the two slot positions.
    for (int pa = 0; pa < k; ++pa) {
      int va = I[pa];
      for (int b = 0; b < n; ++b) {
        if (masks[col] & (std::uint64_t{1} << b)) continue;
        std::uint64_t jmask = (masks[col] & ~(std::uint64_t{1} << va)) | (std::uint64_t{1} << b);
        std::size_t row = index_of(jmask);
        int qb = 0;  // position of b within the sorted subset J
        for (int v : subsets[row]) {
          if (v == b) break;
          ++qb;
        }
        T val = a.at(b, va);
        if ((pa + qb) % 2 != 0) val = -val;
        out.at(static_cast<int>(row), static_cast<int>(col)) = val;
      }
    }
  }
  return out;
}

}  // namespace orbitopes

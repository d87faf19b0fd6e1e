#include "orbitopes/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace orbitopes {

std::string field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

DenseMatrix DenseMatrix::zero(Field f, int rows, int cols) {
  DenseMatrix m;
  m.field_ = f;
  m.a_ = CMat(rows, cols);
  if (f == Field::H) m.b_ = CMat(rows, cols);
  return m;
}

DenseMatrix DenseMatrix::real(RMat m) {
  DenseMatrix out;
  out.field_ = Field::R;
  out.a_ = CMat(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.a_.at(i, j) = m.at(i, j);
  return out;
}

DenseMatrix DenseMatrix::complex_matrix(CMat m) {
  DenseMatrix out;
  out.field_ = Field::C;
  out.a_ = std::move(m);
  return out;
}

DenseMatrix DenseMatrix::quaternion(CMat alpha, CMat beta) {
  if (alpha.rows() != beta.rows() || alpha.cols() != beta.cols()) {
    throw ShapeMismatch("quaternion parts must have equal shape");
  }
  DenseMatrix out;
  out.field_ = Field::H;
  out.a_ = std::move(alpha);
  out.b_ = std::move(beta);
  return out;
}

void DenseMatrix::entry_components(int r, int c, double out[4]) const {
  cxd al = a_.at(r, c);
  out[0] = al.real();
  out[1] = al.imag();
  if (field_ == Field::H) {
    cxd be = b_.at(r, c);
    out[2] = be.real();
    out[3] = -be.imag();
  } else {
    out[2] = out[3] = 0.0;
  }
}

void DenseMatrix::set_entry(int r, int c, const double comp[4]) {
  a_.at(r, c) = cxd(comp[0], comp[1]);
  if (field_ == Field::H) {
    b_.at(r, c) = cxd(comp[2], -comp[3]);
  } else if (comp[2] != 0.0 || comp[3] != 0.0) {
    throw ShapeMismatch("quaternion components given for a non-quaternion matrix");
  }
  if (field_ == Field::R && comp[1] != 0.0) {
    throw ShapeMismatch("complex component given for a real matrix");
  }
}

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.field_ != y.field_ || x.rows() != y.rows() || x.cols() != y.cols()) {
    throw ShapeMismatch("matrix addition shape/field mismatch");
  }
  DenseMatrix out = x;
  out.a_ = x.a_ + y.a_;
  if (x.field_ == Field::H) out.b_ = x.b_ + y.b_;
  return out;
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.field_ != y.field_ || x.rows() != y.rows() || x.cols() != y.cols()) {
    throw ShapeMismatch("matrix subtraction shape/field mismatch");
  }
  DenseMatrix out = x;
  out.a_ = x.a_ - y.a_;
  if (x.field_ == Field::H) out.b_ = x.b_ - y.b_;
  return out;
}

DenseMatrix operator*(double s, const DenseMatrix& x) {
  DenseMatrix out = x;
  out.a_ = cxd(s, 0) * x.a_;
  if (x.field_ == Field::H) out.b_ = cxd(s, 0) * x.b_;
  return out;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.field_ != y.field_) throw ShapeMismatch("matrix product field mismatch");
  if (x.cols() != y.rows()) throw ShapeMismatch("matrix product shape mismatch");
  DenseMatrix out;
  out.field_ = x.field_;
  if (x.field_ != Field::H) {
    out.a_ = x.a_ * y.a_;
    return out;
  }
  // (A1 + jA2)(B1 + jB2) = (A1 B1 - conj(A2) B2) + j(conj(A1) B2 + A2 B1)
  CMat a1 = x.a_, a2 = x.b_, b1 = y.a_, b2 = y.b_;
  auto conj_mat = [](const CMat& m) {
    CMat out2(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out2.at(i, j) = std::conj(m.at(i, j));
    return out2;
  };
  out.a_ = a1 * b1 - conj_mat(a2) * b2;
  out.b_ = conj_mat(a1) * b2 + a2 * b1;
  return out;
}

DenseMatrix DenseMatrix::conj_transpose() const {
  DenseMatrix out;
  out.field_ = field_;
  out.a_ = a_.conj_transpose();
  if (field_ == Field::H) {
    // (A*)_ij = conj(A_ji): alpha part conj-transposed, beta part
    // plain-transposed and negated.
    CMat bt = b_.transpose();
    out.b_ = cxd(-1, 0) * bt;
  }
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out;
  out.field_ = field_;
  out.a_ = a_.transpose();
  if (field_ == Field::H) out.b_ = b_.transpose();
  return out;
}

double DenseMatrix::frobenius() const {
  double s = a_.frobenius();
  if (field_ != Field::H) return s;
  double t = b_.frobenius();
  return std::sqrt(s * s + t * t);
}

double DenseMatrix::trace_form(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.field_ != y.field_ || x.rows() != y.rows() || x.cols() != y.cols()) {
    throw ShapeMismatch("trace form shape/field mismatch");
  }
  double acc = 0;
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < x.cols(); ++j) {
      acc += std::real(std::conj(x.a_.at(i, j)) * y.a_.at(i, j));
      if (x.field_ == Field::H) acc += std::real(std::conj(x.b_.at(i, j)) * y.b_.at(i, j));
    }
  }
  return acc;
}

double DenseMatrix::re_trace() const {
  double t = 0;
  int n = std::min(rows(), cols());
  for (int i = 0; i < n; ++i) t += a_.at(i, i).real();
  return t;
}

bool DenseMatrix::is_hermitian(double rel_tol) const {
  if (rows() != cols()) return false;
  DenseMatrix diff = *this - conj_transpose();
  return diff.frobenius() <= rel_tol * std::max(1.0, frobenius());
}

bool DenseMatrix::is_skew_hermitian(double rel_tol) const {
  if (rows() != cols()) return false;
  DenseMatrix diff = *this + conj_transpose();
  return diff.frobenius() <= rel_tol * std::max(1.0, frobenius());
}

namespace {

// One cyclic Jacobi sweep over all p<q pairs; returns remaining
// off-diagonal Frobenius mass.
double jacobi_sweep(CMat& a) {
  const int n = a.rows();
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      cxd apq = a.at(p, q);
      double r = std::abs(apq);
      if (r == 0.0) continue;
      double app = a.at(p, p).real();
      double aqq = a.at(q, q).real();
      cxd phase = apq / r;
      double tau = (app - aqq) / (2 * r);
      double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
      double c = 1 / std::sqrt(1 + t * t);
      double s = t * c;
      // Unitary U = [[c, -s*phase],[s*conj(phase), c]] on coordinates (p,q).
      for (int k = 0; k < n; ++k) {
        cxd akp = a.at(k, p);
        cxd akq = a.at(k, q);
        a.at(k, p) = c * akp + s * std::conj(phase) * akq;
        a.at(k, q) = -s * phase * akp + c * akq;
      }
      for (int k = 0; k < n; ++k) {
        cxd apk = a.at(p, k);
        cxd aqk = a.at(q, k);
        a.at(p, k) = c * apk + s * phase * aqk;
        a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
      }
      a.at(p, q) = 0;
      a.at(q, p) = 0;
      a.at(p, p) = cxd(a.at(p, p).real(), 0);
      a.at(q, q) = cxd(a.at(q, q).real(), 0);
    }
  }
  double off = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      off += std::norm(a.at(i, j));
    }
  }
  return std::sqrt(off);
}

}  // namespace

std::vector<double> eig_hermitian_values(const CMat& a) {
  if (a.rows() != a.cols()) throw NotHermitian("eigensolver needs a square matrix");
  const int n = a.rows();
  double norm = a.frobenius();
  CMat diff = a - a.conj_transpose();
  if (diff.frobenius() > 1e-12 * std::max(1.0, norm)) {
    throw NotHermitian("matrix is not hermitian within 1e-12 * ||A||");
  }
  CMat work = a;
  // Symmetrize exactly so rounding in the input cannot bias sweeps.
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cxd m = 0.5 * (work.at(i, j) + std::conj(work.at(j, i)));
      work.at(i, j) = m;
      work.at(j, i) = std::conj(m);
    }
    work.at(i, i) = cxd(work.at(i, i).real(), 0);
  }
  double target = 1e-13 * std::max(1.0, norm);
  for (int sweep = 0; sweep < 60; ++sweep) {
    if (jacobi_sweep(work) <= target) break;
  }
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = work.at(i, i).real();
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

Spectrum eig_hermitian(const DenseMatrix& a) {
  if (a.field() == Field::H) {
    throw NotHermitian("quaternion matrices must be embedded before eig_hermitian");
  }
  return Spectrum{eig_hermitian_values(a.alpha())};
}

CMat complexify(const DenseMatrix& x) {
  if (x.field() == Field::H) throw ShapeMismatch("cannot widen a quaternion matrix to C");
  return x.alpha();
}

CMat hermitian_dilation_c(const CMat& x) {
  const int m = x.rows(), n = x.cols();
  CMat out(m + n, m + n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      out.at(i, m + j) = x.at(i, j);
      out.at(m + j, i) = std::conj(x.at(i, j));
    }
  }
  return out;
}

DenseMatrix hermitian_dilation(const DenseMatrix& x) {
  if (x.field() == Field::H) {
    throw ShapeMismatch("dilation of quaternion matrices goes through embed_quaternion");
  }
  CMat d = hermitian_dilation_c(x.alpha());
  if (x.field() == Field::R) {
    RMat r(d.rows(), d.cols());
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j) r.at(i, j) = d.at(i, j).real();
    return DenseMatrix::real(std::move(r));
  }
  return DenseMatrix::complex_matrix(std::move(d));
}

DenseMatrix embed_quaternion(const DenseMatrix& a) {
  if (a.field() != Field::H) throw ShapeMismatch("embed_quaternion expects a quaternion matrix");
  const int m = a.rows(), n = a.cols();
  CMat out(2 * m, 2 * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      cxd a1 = a.alpha().at(i, j);
      cxd a2 = a.beta().at(i, j);
      out.at(i, j) = a1;
      out.at(i, n + j) = -std::conj(a2);
      out.at(m + i, j) = a2;
      out.at(m + i, n + j) = std::conj(a1);
    }
  }
  return DenseMatrix::complex_matrix(out);
}

Spectrum singular_values(const DenseMatrix& x) {
  if (x.field() == Field::H) {
    Spectrum doubled = singular_values(embed_quaternion(x));
    Spectrum out;
    int count = std::min(x.rows(), x.cols());
    for (int i = 0; i < count; ++i) out.values.push_back(doubled.values[2 * i]);
    return out;
  }
  auto eig = eig_hermitian_values(hermitian_dilation_c(x.alpha()));
  int count = std::min(x.rows(), x.cols());
  Spectrum out;
  out.values.assign(eig.begin(), eig.begin() + count);
  for (double& v : out.values) v = std::max(v, 0.0);
  return out;
}

double ky_fan_norm(const DenseMatrix& x, int k) {
  int n = std::min(x.rows(), x.cols());
  if (k < 1 || k > n) {
    throw ShapeMismatch("Ky Fan index must lie in [1, min(m,n)]");
  }
  auto sv = singular_values(x);
  double s = 0;
  for (int i = 0; i < k; ++i) s += sv.values[i];
  return s;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

long long binomial_capped(int n, int k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i stays integral at every step.
    if (r > (cap + 1) / (n - k + i) * i) return cap + 1;
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

int pfaffian_sign(const RMat& a, double tol_scale) {
  if (a.rows() != a.cols()) throw NotSkewSymmetric("Pfaffian needs a square matrix");
  const int n = a.rows();
  if (n % 2 != 0) throw NotSkewSymmetric("Pfaffian needs even size");
  double norm = a.frobenius();
  RMat skew_check = a + a.transpose();
  if (skew_check.frobenius() > 1e-10 * std::max(1.0, norm)) {
    throw NotSkewSymmetric("matrix is not skew-symmetric");
  }
  if (n == 0) return 1;
  double tol = tol_scale * std::max(1.0, norm);
  RMat b = a;
  int sign = 1;
  for (int k = 0; k + 1 < n; k += 2) {
    // Pivot the largest entry of column k below the diagonal into row k+1.
    int p = k + 1;
    for (int i = k + 2; i < n; ++i) {
      if (std::abs(b.at(i, k)) > std::abs(b.at(p, k))) p = i;
    }
    if (std::abs(b.at(p, k)) <= tol) return 0;
    if (p != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(b.at(k + 1, j), b.at(p, j));
      for (int i = 0; i < n; ++i) std::swap(b.at(i, k + 1), b.at(i, p));
      sign = -sign;
    }
    double pivot = b.at(k, k + 1);
    if (pivot > 0) {
      // sign *= +1
    } else if (pivot < 0) {
      sign = -sign;
    } else {
      return 0;
    }
    for (int i = k + 2; i < n; ++i) {
      double f = b.at(i, k) / b.at(k + 1, k);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) b.at(i, j) -= f * b.at(k + 1, j);
      for (int j = 0; j < n; ++j) b.at(j, i) -= f * b.at(j, k + 1);
    }
  }
  return sign;
}

int det_sign(const RMat& a, double tol_scale) {
  if (a.rows() != a.cols()) throw ShapeMismatch("det_sign needs a square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  double tol = tol_scale * std::max(1.0, a.frobenius());
  RMat b = a;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::abs(b.at(i, k)) > std::abs(b.at(p, k))) p = i;
    }
    if (std::abs(b.at(p, k)) <= tol) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(p, j));
      sign = -sign;
    }
    if (b.at(k, k) < 0) sign = -sign;
    for (int i = k + 1; i < n; ++i) {
      double f = b.at(i, k) / b.at(k, k);
      for (int j = k; j < n; ++j) b.at(i, j) -= f * b.at(k, j);
    }
  }
  return sign;
}

}  // namespace orbitopes

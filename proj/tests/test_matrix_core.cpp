#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "orbitopes/matrix.hpp"
#include "orbitopes/rng.hpp"

using namespace orbitopes;

namespace {

CMat random_hermitian(int n, Rng& rng) {
  CMat a(n, n);
  for (int i = 0; i < n; ++i) {
    a.at(i, i) = rng.gaussian();
    for (int j = i + 1; j < n; ++j) {
      cxd v(rng.gaussian(), rng.gaussian());
      a.at(i, j) = v;
      a.at(j, i) = std::conj(v);
    }
  }
  return a;
}

RMat random_real(int m, int n, Rng& rng) {
  RMat a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = rng.gaussian();
  return a;
}

// Closed-form eigenvalues of a 3x3 hermitian matrix from its
// characteristic polynomial (trigonometric solution of the cubic).
std::vector<double> cubic_eigs(const CMat& a) {
  double q = (a.at(0, 0).real() + a.at(1, 1).real() + a.at(2, 2).real()) / 3.0;
  CMat b = a;
  for (int i = 0; i < 3; ++i) b.at(i, i) -= q;
  double p2 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p2 += std::norm(b.at(i, j));
  double p = std::sqrt(p2 / 6.0);
  if (p < 1e-14) return {q, q, q};
  // det(b / p)
  CMat c = b;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c.at(i, j) /= p;
  cxd det = c.at(0, 0) * (c.at(1, 1) * c.at(2, 2) - c.at(1, 2) * c.at(2, 1)) -
            c.at(0, 1) * (c.at(1, 0) * c.at(2, 2) - c.at(1, 2) * c.at(2, 0)) +
            c.at(0, 2) * (c.at(1, 0) * c.at(2, 1) - c.at(1, 1) * c.at(2, 0));
  double r = std::clamp(det.real() / 2.0, -1.0, 1.0);
  double phi = std::acos(r) / 3.0;
  double e1 = q + 2 * p * std::cos(phi);
  double e3 = q + 2 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  double e2 = 3 * q - e1 - e3;
  std::vector<double> v{e1, e2, e3};
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("eig_hermitian: diagonal and shift covariance") {
  CMat d(3, 3);
  d.at(0, 0) = 3;
  d.at(1, 1) = 1;
  d.at(2, 2) = -2;
  auto vals = eig_hermitian_values(d);
  CHECK(vals == std::vector<double>{3, 1, -2});

  Rng rng(11);
  CMat a = random_hermitian(5, rng);
  auto base = eig_hermitian_values(a);
  CMat shifted = a;
  for (int i = 0; i < 5; ++i) shifted.at(i, i) += 2.5;
  auto sh = eig_hermitian_values(shifted);
  for (int i = 0; i < 5; ++i) CHECK(sh[i] == doctest::Approx(base[i] + 2.5).epsilon(1e-12));
}

TEST_CASE("eig_hermitian agrees with closed-form cubic roots at 3x3") {
  Rng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    CMat a = random_hermitian(3, rng);
    auto jac = eig_hermitian_values(a);
    auto oracle = cubic_eigs(a);
    for (int i = 0; i < 3; ++i) CHECK(jac[i] == doctest::Approx(oracle[i]).epsilon(1e-10));
  }
}

TEST_CASE("eig_hermitian rejects non-hermitian input") {
  CMat a(2, 2);
  a.at(0, 1) = cxd(1, 0);
  a.at(1, 0) = cxd(2, 0);
  CHECK_THROWS_AS(eig_hermitian_values(a), NotHermitian);
}

TEST_CASE("hermitian dilation: frozen examples and spectrum symmetry") {
  RMat one(1, 1);
  one.at(0, 0) = 1;
  auto d1 = hermitian_dilation(DenseMatrix::real(one));
  auto v1 = eig_hermitian(d1).values;
  REQUIRE(v1.size() == 2);
  CHECK(v1[0] == doctest::Approx(1).epsilon(1e-14));
  CHECK(v1[1] == doctest::Approx(-1).epsilon(1e-14));

  RMat diag(2, 2);
  diag.at(0, 0) = 2;
  diag.at(1, 1) = 1;
  auto d2 = hermitian_dilation(DenseMatrix::real(diag));
  auto v2 = eig_hermitian(d2).values;
  CHECK(v2.size() == 4);
  CHECK(v2[0] == doctest::Approx(2));
  CHECK(v2[1] == doctest::Approx(1));
  CHECK(v2[2] == doctest::Approx(-1));
  CHECK(v2[3] == doctest::Approx(-2));

  auto z = hermitian_dilation(DenseMatrix::real(RMat(3, 2)));
  for (double v : eig_hermitian(z).values) CHECK(v == 0.0);

  Rng rng(17);
  RMat a = random_real(4, 3, rng);
  auto spec = eig_hermitian(hermitian_dilation(DenseMatrix::real(a))).values;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    CHECK(spec[i] == doctest::Approx(-spec[spec.size() - 1 - i]).epsilon(1e-10));
  }
}

TEST_CASE("singular values: frozen examples") {
  RMat diag(2, 2);
  diag.at(0, 0) = 3;
  diag.at(1, 1) = 1;
  CHECK(singular_values(DenseMatrix::real(diag)).values[0] == doctest::Approx(3));
  CHECK(singular_values(DenseMatrix::real(diag)).values[1] == doctest::Approx(1));

  // Rotation matrices have all singular values 1.
  double th = 0.7;
  RMat rot(3, 3);
  rot.at(0, 0) = std::cos(th);
  rot.at(0, 1) = -std::sin(th);
  rot.at(1, 0) = std::sin(th);
  rot.at(1, 1) = std::cos(th);
  rot.at(2, 2) = 1;
  for (double v : singular_values(DenseMatrix::real(rot)).values) {
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }

  // Quaternion scalar [i]: embedding spectrum {1,1,-1,-1} halves to sigma = (1).
  CMat alpha(1, 1), beta(1, 1);
  alpha.at(0, 0) = cxd(0, 1);
  auto q = DenseMatrix::quaternion(alpha, beta);
  auto qs = singular_values(q);
  REQUIRE(qs.values.size() == 1);
  CHECK(qs.values[0] == doctest::Approx(1.0));
}

TEST_CASE("unitary invariance of singular values (sampled rotations)") {
  Rng rng(23);
  RMat a = random_real(3, 3, rng);
  double th = 1.1;
  RMat u(3, 3);
  u.at(0, 0) = std::cos(th);
  u.at(0, 1) = -std::sin(th);
  u.at(1, 0) = std::sin(th);
  u.at(1, 1) = std::cos(th);
  u.at(2, 2) = 1;
  auto sv = singular_values(DenseMatrix::real(a)).values;
  auto svu = singular_values(DenseMatrix::real(u * a)).values;
  for (std::size_t i = 0; i < sv.size(); ++i) CHECK(sv[i] == doctest::Approx(svu[i]).epsilon(1e-9));
}

TEST_CASE("embed_quaternion: frozen block formula and homomorphism") {
  // [1] -> 2x2 identity
  CMat a1(1, 1), b1(1, 1);
  a1.at(0, 0) = 1;
  auto e1 = embed_quaternion(DenseMatrix::quaternion(a1, b1));
  CHECK(e1.alpha().at(0, 0) == cxd(1, 0));
  CHECK(e1.alpha().at(1, 1) == cxd(1, 0));
  CHECK(e1.alpha().at(0, 1) == cxd(0, 0));

  // [j] -> [[0,-1],[1,0]]
  CMat a2(1, 1), b2(1, 1);
  b2.at(0, 0) = 1;
  auto ej = embed_quaternion(DenseMatrix::quaternion(a2, b2));
  CHECK(ej.alpha().at(0, 0) == cxd(0, 0));
  CHECK(ej.alpha().at(0, 1) == cxd(-1, 0));
  CHECK(ej.alpha().at(1, 0) == cxd(1, 0));
  CHECK(ej.alpha().at(1, 1) == cxd(0, 0));

  Rng rng(29);
  auto rand_quat = [&](int n) {
    CMat al(n, n), be(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        al.at(i, j) = cxd(rng.gaussian(), rng.gaussian());
        be.at(i, j) = cxd(rng.gaussian(), rng.gaussian());
      }
    }
    return DenseMatrix::quaternion(al, be);
  };
  for (int trial = 0; trial < 10; ++trial) {
    auto p = rand_quat(3);
    auto q = rand_quat(3);
    auto lhs = embed_quaternion(p * q);
    auto rhs = embed_quaternion(p) * embed_quaternion(q);
    CHECK((lhs - rhs).frobenius() <= 1e-10 * std::max(1.0, rhs.frobenius()));
  }
}

TEST_CASE("hermitian quaternion embedding doubles the spectrum") {
  Rng rng(31);
  // Random hermitian quaternion 2x2: real diagonal, one quaternion off-entry.
  CMat al(2, 2), be(2, 2);
  al.at(0, 0) = rng.gaussian();
  al.at(1, 1) = rng.gaussian();
  cxd a_off(rng.gaussian(), rng.gaussian());
  cxd b_off(rng.gaussian(), rng.gaussian());
  al.at(0, 1) = a_off;
  al.at(1, 0) = std::conj(a_off);
  be.at(0, 1) = b_off;
  be.at(1, 0) = -b_off;
  auto h = DenseMatrix::quaternion(al, be);
  CHECK(h.is_hermitian(1e-12));
  auto emb = embed_quaternion(h);
  CHECK(emb.is_hermitian(1e-12));
  auto vals = eig_hermitian(emb).values;
  REQUIRE(vals.size() == 4);
  CHECK(vals[0] == doctest::Approx(vals[1]).epsilon(1e-10));
  CHECK(vals[2] == doctest::Approx(vals[3]).epsilon(1e-10));
}

TEST_CASE("ky fan norms") {
  RMat d(3, 3);
  d.at(0, 0) = 3;
  d.at(1, 1) = 2;
  d.at(2, 2) = 1;
  auto m = DenseMatrix::real(d);
  CHECK(ky_fan_norm(m, 2) == doctest::Approx(5));
  CHECK(ky_fan_norm(m, 1) == doctest::Approx(3));
  CHECK(ky_fan_norm(m, 3) == doctest::Approx(6));
  CHECK_THROWS_AS(ky_fan_norm(m, 4), ShapeMismatch);
  CHECK_THROWS_AS(ky_fan_norm(m, 0), ShapeMismatch);

  RMat id(4, 4);
  for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
  for (int k = 1; k <= 4; ++k) CHECK(ky_fan_norm(DenseMatrix::real(id), k) == doctest::Approx(k));

  // Triangle inequality on random pairs.
  Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    RMat a = random_real(4, 3, rng), b = random_real(4, 3, rng);
    auto da = DenseMatrix::real(a), db = DenseMatrix::real(b);
    for (int k = 1; k <= 3; ++k) {
      CHECK(ky_fan_norm(da + db, k) <= ky_fan_norm(da, k) + ky_fan_norm(db, k) + 1e-9);
    }
  }
}

TEST_CASE("exterior power: diagonal subset sums and identity") {
  CMat d(3, 3);
  d.at(0, 0) = 5;
  d.at(1, 1) = 3;
  d.at(2, 2) = 1;
  auto l2 = exterior_power_additive(d, 2);
  auto vals = eig_hermitian_values(l2);
  CHECK(vals == std::vector<double>{8, 6, 4});

  CMat id = CMat::identity(5);
  auto l3 = exterior_power_additive(id, 3);
  CHECK(l3.rows() == 10);
  for (double v : eig_hermitian_values(l3)) CHECK(v == doctest::Approx(3.0));
}

TEST_CASE("exterior power spectrum equals k-subset sums (independent oracle)") {
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    CMat a = random_hermitian(6, rng);
    auto base = eig_hermitian_values(a);
    for (int k : {2, 3}) {
      auto lk = exterior_power_additive(a, k);
      auto got = eig_hermitian_values(lk);
      std::vector<double> expect;
      for (const auto& subset : k_subsets(6, k)) {
        double s = 0;
        for (int i : subset) s += base[i];
        expect.push_back(s);
      }
      std::sort(expect.begin(), expect.end(), std::greater<>());
      REQUIRE(got.size() == expect.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("exterior power is linear (exact on integer matrices)") {
  auto int_herm = [](std::initializer_list<std::initializer_list<int>> rows) {
    CMat m(static_cast<int>(rows.size()), static_cast<int>(rows.size()));
    int i = 0;
    for (const auto& row : rows) {
      int j = 0;
      for (int v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  };
  CMat a = int_herm({{2, 1, 0, 3}, {1, -1, 4, 0}, {0, 4, 5, 2}, {3, 0, 2, 0}});
  CMat b = int_herm({{1, 0, 2, -1}, {0, 3, 1, 1}, {2, 1, -2, 0}, {-1, 1, 0, 4}});
  for (int k : {2, 3}) {
    auto lhs = exterior_power_additive(a + b, k);
    auto rhs = exterior_power_additive(a, k) + exterior_power_additive(b, k);
    CHECK((lhs - rhs).frobenius() == 0.0);
    auto scaled = exterior_power_additive(cxd(3, 0) * a, k);
    auto scaled2 = cxd(3, 0) * exterior_power_additive(a, k);
    CHECK((scaled - scaled2).frobenius() == 0.0);
  }
  // Rational instantiation stays exact as well.
  Mat<Rational> qa(2, 2), qb(2, 2);
  qa.at(0, 0) = Rational(1, 2);
  qa.at(0, 1) = Rational(1, 3);
  qa.at(1, 0) = Rational(1, 3);
  qa.at(1, 1) = Rational(2);
  qb.at(0, 0) = Rational(5);
  qb.at(1, 1) = Rational(-1, 7);
  auto ql = exterior_power_additive(qa + qb, 2);
  auto qr = exterior_power_additive(qa, 2) + exterior_power_additive(qb, 2);
  CHECK(ql.at(0, 0) == qr.at(0, 0));
}

TEST_CASE("exterior power size cap") {
  CMat big = CMat::identity(30);
  CHECK_THROWS_AS(exterior_power_additive(big, 15, 20000), SizeCapExceeded);
}

TEST_CASE("pfaffian sign: frozen 2x2 and determinant cross-check") {
  RMat p(2, 2);
  p.at(0, 1) = 1;
  p.at(1, 0) = -1;
  CHECK(pfaffian_sign(p) == 1);
  RMat m(2, 2);
  m.at(0, 1) = -1;
  m.at(1, 0) = 1;
  CHECK(pfaffian_sign(m) == -1);

  RMat odd(3, 3);
  CHECK_THROWS_AS(pfaffian_sign(odd), NotSkewSymmetric);
  RMat notskew(2, 2);
  notskew.at(0, 0) = 1;
  notskew.at(0, 1) = 1;
  notskew.at(1, 0) = -1;
  CHECK_THROWS_AS(pfaffian_sign(notskew), NotSkewSymmetric);

  Rng rng(43);
  for (int n : {4, 6, 8}) {
    for (int trial = 0; trial < 20; ++trial) {
      RMat a(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          double v = rng.gaussian();
          a.at(i, j) = v;
          a.at(j, i) = -v;
        }
      }
      int pf = pfaffian_sign(a);
      int ds = det_sign(a);
      // det = Pf^2, so a nonsingular skew matrix has positive determinant.
      if (pf != 0) CHECK(ds == 1);
      CHECK(pf * pf == (ds == 0 ? 0 : 1));
    }
  }
  // Singular skew matrix reports 0.
  RMat s(4, 4);
  s.at(0, 1) = 1;
  s.at(1, 0) = -1;
  CHECK(pfaffian_sign(s) == 0);
}

TEST_CASE("trace form and von Neumann pairing bound") {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    RMat a = random_real(3, 3, rng), b = random_real(3, 3, rng);
    auto da = DenseMatrix::real(a), db = DenseMatrix::real(b);
    double pairing = DenseMatrix::trace_form(da, db);
    auto sa = singular_values(da).values;
    auto sb = singular_values(db).values;
    double bound = 0;
    for (int i = 0; i < 3; ++i) bound += sa[i] * sb[i];
    CHECK(std::abs(pairing) <= bound + 1e-9);
  }
}

TEST_CASE("quaternion entry component round-trip") {
  auto q = DenseMatrix::zero(Field::H, 1, 1);
  double comp[4] = {1.5, -2.0, 3.25, 0.5};
  q.set_entry(0, 0, comp);
  double out[4];
  q.entry_components(0, 0, out);
  for (int i = 0; i < 4; ++i) CHECK(out[i] == comp[i]);
  // Quaternion conjugate transpose flips the vector part.
  auto qc = q.conj_transpose();
  qc.entry_components(0, 0, out);
  CHECK(out[0] == comp[0]);
  CHECK(out[1] == -comp[1]);
  CHECK(out[2] == -comp[2]);
  CHECK(out[3] == -comp[3]);
}

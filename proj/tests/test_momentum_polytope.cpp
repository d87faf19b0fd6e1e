#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "orbitopes/momentum_polytope.hpp"
#include "orbitopes/rng.hpp"

using namespace orbitopes;

namespace {
using Vec = std::vector<double>;
using QVec = std::vector<Rational>;

std::set<int> to_set(const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); }
}  // namespace

TEST_CASE("contains: frozen B2 examples") {
  auto sys = RestrictedRootSystem::make(RootFamily::B, 2);
  MomentumPolytope<double> p(sys, Vec{2, 1});
  CHECK(p.contains(Vec{1.5, 1.5}));
  CHECK_FALSE(p.contains(Vec{2.5, 0}));
  CHECK(p.contains(Vec{2, 1}));
}

TEST_CASE("contains_bruteforce: frozen examples") {
  auto a2 = RestrictedRootSystem::make(RootFamily::A, 2);
  MomentumPolytope<Rational> pa(a2, QVec{1, 0, -1});
  CHECK(pa.contains_bruteforce(QVec{Rational(1, 3), Rational(1, 3), Rational(-2, 3)}));
  CHECK(pa.contains(QVec{Rational(1, 3), Rational(1, 3), Rational(-2, 3)}));

  auto d3 = RestrictedRootSystem::make(RootFamily::D, 3);
  MomentumPolytope<Rational> pd(d3, QVec{1, 1, 1});
  CHECK_FALSE(pd.contains_bruteforce(QVec{1, 1, -1}));
  CHECK_FALSE(pd.contains(QVec{1, 1, -1}));
  // mu_2 carries the violation: value 3/2 against 1/2.
  CHECK(d3.mu(1, QVec{1, 1, -1}) == Rational(3, 2));
  CHECK(d3.mu(1, QVec{1, 1, 1}) == Rational(1, 2));
}

TEST_CASE("oracle equivalence on random points, every family, rank <= 4") {
  Rng rng(20240915);
  for (auto fam : {RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::BC, RootFamily::D}) {
    for (int n = (fam == RootFamily::D ? 2 : 2); n <= 4; n += 2) {
      auto sys = RestrictedRootSystem::make(fam, n);
      Vec x(sys.ambient());
      for (int i = 0; i < sys.ambient(); ++i) x[i] = sys.ambient() - i;
      if (fam == RootFamily::A) {
        double mean = 0;
        for (double v : x) mean += v;
        mean /= x.size();
        for (double& v : x) v -= mean;
      }
      MomentumPolytope<double> p(sys, x);
      int checked = 0;
      for (int trial = 0; trial < 250; ++trial) {
        Vec y(sys.ambient());
        for (double& v : y) v = 3.0 * rng.gaussian();
        if (fam == RootFamily::A) {
          double mean = 0;
          for (double v : y) mean += v;
          mean /= y.size();
          for (double& v : y) v -= mean;
        }
        bool fast = p.contains(y, 1e-9);
        bool slow = p.contains_bruteforce(y, 1000000, 1e-9);
        // Skip the knife edge: only demand agreement off the boundary.
        if (std::abs(p.worst_slack(y)) > 1e-7) {
          CHECK(fast == slow);
          ++checked;
        }
      }
      CHECK(checked > 150);
    }
  }
}

TEST_CASE("is_x_connected: frozen examples") {
  auto b3 = RestrictedRootSystem::make(RootFamily::B, 3);
  Vec x{1, 1, 1};
  CHECK_FALSE(is_x_connected(b3, x, {0, 1}));  // beta-values (0,0,1)
  CHECK(is_x_connected(b3, x, {1, 2}));
  CHECK(is_x_connected(b3, x, {}));
}

TEST_CASE("facet indices match cube / cross-polytope / permutahedron data") {
  for (int n : {2, 3, 4}) {
    auto b = RestrictedRootSystem::make(RootFamily::B, n);
    Vec ones(n, 1.0);
    MomentumPolytope<double> cube(b, ones);
    CHECK(cube.facet_indices() == std::vector<int>{0});

    Vec e1(n, 0.0);
    e1[0] = 1.0;
    MomentumPolytope<double> cross(b, e1);
    CHECK(cross.facet_indices() == std::vector<int>{n - 1});
  }
  for (int n : {2, 3}) {
    auto a = RestrictedRootSystem::make(RootFamily::A, n);
    Vec x(n + 1);
    for (int i = 0; i <= n; ++i) x[i] = (n - 2.0 * i) / 2.0;
    MomentumPolytope<double> perm(a, x);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    CHECK(perm.facet_indices() == all);
  }
}

TEST_CASE("facet validity: equality vertices span an (n-1)-dimensional affine hull") {
  // Exact rational rank computation over the cube instance.
  for (int n : {2, 3}) {
    auto b = RestrictedRootSystem::make(RootFamily::B, n);
    QVec ones(n, Rational(1));
    MomentumPolytope<Rational> p(b, ones);
    for (int i : p.facet_indices()) {
      std::vector<QVec> hits;
      Rational level = b.mu(i, ones);
      for (const auto& v : b.weyl_orbit(ones)) {
        if (b.mu(i, v) == level) hits.push_back(v);
      }
      REQUIRE(hits.size() >= 2);
      // Gaussian elimination on (hits[k] - hits[0]).
      std::vector<QVec> rows;
      for (std::size_t k = 1; k < hits.size(); ++k) {
        QVec d(n);
        for (int c = 0; c < n; ++c) d[c] = hits[k][c] - hits[0][c];
        rows.push_back(d);
      }
      int rank = 0;
      for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); ++r) {
          if (!rows[r][col].is_zero()) {
            pivot = static_cast<int>(r);
            break;
          }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (static_cast<int>(r) == rank || rows[r][col].is_zero()) continue;
          Rational f = rows[r][col] / rows[rank][col];
          for (int c = 0; c < n; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
      }
      CHECK(rank == n - 1);
    }
  }
}

TEST_CASE("face orbits: frozen examples") {
  auto a2 = RestrictedRootSystem::make(RootFamily::A, 2);
  MomentumPolytope<double> hex(a2, Vec{1, 0, -1});
  auto orbits = hex.face_orbits();
  REQUIRE(orbits.size() == 4);
  CHECK(orbits[0].dim == 0);
  CHECK(orbits[1].dim == 1);
  CHECK(orbits[2].dim == 1);
  CHECK(orbits[3].dim == 2);

  auto b2 = RestrictedRootSystem::make(RootFamily::B, 2);
  MomentumPolytope<double> square(b2, Vec{1, 1});
  auto sq = square.face_orbits();
  REQUIRE(sq.size() == 3);
  CHECK(sq[0].indices.empty());
  CHECK(sq[1].indices == std::vector<int>{1});
  CHECK((sq[2].indices == std::vector<int>{0, 1}));

  // Regular base point: all 2^n subsets are x-connected.
  auto b3 = RestrictedRootSystem::make(RootFamily::B, 3);
  MomentumPolytope<double> reg(b3, Vec{3, 2, 1});
  CHECK(reg.face_orbits().size() == 8);
}

TEST_CASE("full-dimensionality") {
  auto b3 = RestrictedRootSystem::make(RootFamily::B, 3);
  CHECK_FALSE(MomentumPolytope<double>(b3, Vec{0, 0, 0}).is_full_dimensional());
  CHECK(MomentumPolytope<double>(b3, Vec{1, 0, 0}).is_full_dimensional());
  auto d4 = RestrictedRootSystem::make(RootFamily::D, 4);
  CHECK(MomentumPolytope<double>(d4, Vec{1, 1, 1, 1}).is_full_dimensional());
  CHECK_THROWS_AS(MomentumPolytope<double>(b3, Vec{0, 0, 0}).facet_indices(),
                  NotFullDimensional);
  // D2 = A1 x A1 is reducible: a base point vanishing on one component
  // gives a lower-dimensional polytope.
  auto d2 = RestrictedRootSystem::make(RootFamily::D, 2);
  CHECK_FALSE(MomentumPolytope<double>(d2, Vec{1, 1}).is_full_dimensional());
  CHECK(MomentumPolytope<double>(d2, Vec{2, 1}).is_full_dimensional());
}

TEST_CASE("vertex consistency and facet violations") {
  auto b3 = RestrictedRootSystem::make(RootFamily::B, 3);
  Vec x{3, 2, 1};
  MomentumPolytope<double> p(b3, x);
  for (const auto& v : b3.weyl_orbit(x)) CHECK(p.contains(v));
  for (int i : p.facet_indices()) {
    Vec bumped = x;
    for (int c = 0; c < 3; ++c) bumped[c] += 1e-3 * b3.coweight(i)[c].to_double();
    CHECK_FALSE(p.contains(bumped, 1e-9));
  }
}

TEST_CASE("dominance order is transitive (monotonicity property)") {
  Rng rng(7);
  auto sys = RestrictedRootSystem::make(RootFamily::C, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Vec x(3), y(3), z(3);
    for (auto* v : {&x, &y, &z}) {
      for (double& c : *v) c = 2.0 * rng.gaussian();
    }
    MomentumPolytope<double> px(sys, x), py(sys, y);
    if (px.contains(y) && py.contains(z)) CHECK(px.contains(z, 1e-8));
  }
}

TEST_CASE("beta_zero_indices reports the roots treated as zero") {
  auto b3 = RestrictedRootSystem::make(RootFamily::B, 3);
  MomentumPolytope<double> p(b3, Vec{1, 1, 1});
  CHECK(to_set(p.beta_zero_indices()) == std::set<int>{0, 1});
}

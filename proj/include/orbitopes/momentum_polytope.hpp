#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "orbitopes/root_system.hpp"

namespace orbitopes {

/// One W-orbit of faces of P_x, identified by its x-connected subset of
/// simple-root indices (0-based). The face dimension equals |indices|.
struct FaceOrbit {
  std::vector<int> indices;
  int dim = 0;
};

/// True when every connected component of the Dynkin subgraph induced by
/// I contains a root with beta(x) != 0. The empty set is x-connected.
/// beta_zero_tol: relative tolerance for treating a float beta-value as
/// zero (ignored in rational mode).
template <typename S>
bool is_x_connected(const RestrictedRootSystem& sys, const std::vector<S>& x,
                    const std::vector<int>& I, double beta_zero_tol = 1e-9);

/// Momentum polytope P_x = conv(Wx) handled through Kostant's
/// inequalities mu_j(y) <= mu_j(x); no vertex or halfspace enumeration
/// is ever materialized except in the brute-force oracle.
template <typename S>
class MomentumPolytope {
 public:
  MomentumPolytope(RestrictedRootSystem sys, const std::vector<S>& x)
      : sys_(std::move(sys)), x_(sys_.dominant(x).dominant) {}

  const RestrictedRootSystem& system() const { return sys_; }
  const std::vector<S>& base() const { return x_; }

  /// Kostant membership: mu_j(dominant(y)) <= mu_j(x) for all j.
  bool contains(const std::vector<S>& y, double tol = 1e-9) const {
    auto dom = sys_.dominant(y).dominant;
    for (int j = 0; j < sys_.rank(); ++j) {
      if (!detail::ScalarTraits<S>::leq(sys_.mu(j, dom), sys_.mu(j, x_), tol)) return false;
    }
    return true;
  }

  /// Worst slack max_j (mu_j(dominant(y)) - mu_j(x)); positive means outside.
  double worst_slack(const std::vector<S>& y) const {
    auto dom = sys_.dominant(y).dominant;
    double worst = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < sys_.rank(); ++j) {
      double s = to_double(sys_.mu(j, dom)) - to_double(sys_.mu(j, x_));
      worst = std::max(worst, s);
    }
    return worst;
  }

  /// Independent oracle: x - u lies in the dual cone T for every point u
  /// of the full Weyl orbit of y.
  bool contains_bruteforce(const std::vector<S>& y, std::size_t cap = 1000000,
                           double tol = 1e-9) const {
    for (const auto& u : sys_.weyl_orbit(y, cap)) {
      std::vector<S> diff(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) diff[i] = x_[i] - u[i];
      if (!sys_.in_dual_cone(diff, tol)) return false;
    }
    return true;
  }

  /// Full-dimensionality: every connected component of the Dynkin graph
  /// carries a simple root not vanishing on x.
  bool is_full_dimensional() const {
    std::vector<int> all(sys_.rank());
    for (int i = 0; i < sys_.rank(); ++i) all[i] = i;
    return is_x_connected(sys_, x_, all);
  }

  /// Facet orbit representatives: indices i (0-based) for which
  /// {0..n-1} \ {i} is x-connected. Each i stands for the facet
  /// P_x(i) = {y : mu_i(y) = mu_i(x)}.
  std::vector<int> facet_indices() const {
    if (!is_full_dimensional()) {
      throw NotFullDimensional("facets are defined only for full-dimensional P_x");
    }
    std::vector<int> out;
    for (int i = 0; i < sys_.rank(); ++i) {
      std::vector<int> rest;
      for (int j = 0; j < sys_.rank(); ++j)
        if (j != i) rest.push_back(j);
      if (is_x_connected(sys_, x_, rest)) out.push_back(i);
    }
    return out;
  }

  /// All W-orbits of faces, via the bijection with x-connected subsets.
  std::vector<FaceOrbit> face_orbits(int rank_cap = 16) const {
    if (sys_.rank() > rank_cap) {
      throw SizeCapExceeded("face-orbit enumeration capped at rank " +
                            std::to_string(rank_cap));
    }
    if (!is_full_dimensional()) {
      throw NotFullDimensional("face orbits require full-dimensional P_x");
    }
    std::vector<FaceOrbit> orbits;
    int n = sys_.rank();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) I.push_back(i);
      if (is_x_connected(sys_, x_, I)) {
        orbits.push_back(FaceOrbit{I, static_cast<int>(I.size())});
      }
    }
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const FaceOrbit& a, const FaceOrbit& b) { return a.dim < b.dim; });
    return orbits;
  }

  /// Indices whose beta-values were treated as zero (reported by the CLI,
  /// since x-connectivity may flip under perturbation of those values).
  std::vector<int> beta_zero_indices(double beta_zero_tol = 1e-9) const;

 private:
  static double to_double(const S& v) {
    if constexpr (std::is_same_v<S, double>) {
      return v;
    } else {
      return v.to_double();
    }
  }

  RestrictedRootSystem sys_;
  std::vector<S> x_;
};

template <typename S>
bool is_x_connected(const RestrictedRootSystem& sys, const std::vector<S>& x,
                    const std::vector<int>& I, double beta_zero_tol) {
  using T = detail::ScalarTraits<S>;
  auto betas = sys.simple_root_values(sys.dominant(x).dominant);
  double tol = 0.0;
  if constexpr (std::is_same_v<S, double>) {
    double scale = 0;
    for (double b : betas) scale = std::max(scale, std::abs(b));
    tol = beta_zero_tol * std::max(1.0, scale);
  }
  for (const auto& comp : sys.dynkin_components(I)) {
    bool has_nonzero = false;
    for (int j : comp) {
      if (!T::is_zero(betas[j], tol)) {
        has_nonzero = true;
        break;
      }
    }
    if (!has_nonzero) return false;
  }
  return true;
}

template <typename S>
std::vector<int> MomentumPolytope<S>::beta_zero_indices(double beta_zero_tol) const {
  using T = detail::ScalarTraits<S>;
  auto betas = sys_.simple_root_values(x_);
  double scale = 0;
  if constexpr (std::is_same_v<S, double>) {
    for (double b : betas) scale = std::max(scale, std::abs(b));
  }
  double tol = std::is_same_v<S, double> ? beta_zero_tol * std::max(1.0, scale) : 0.0;
  std::vector<int> out;
  for (int j = 0; j < sys_.rank(); ++j) {
    if (T::is_zero(betas[j], tol)) out.push_back(j);
  }
  return out;
}

}  // namespace orbitopes

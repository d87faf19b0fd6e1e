#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitopes/orbitope.hpp"
#include "orbitopes/pencil.hpp"

namespace orbitopes {

/// Extreme-orbit representative z_i = h_{mu_i} / (s * mu_i(x)) of the
/// coorbitope, for a facet index i of P_x; exact when x is.
struct ExtremeOrbit {
  int index = 0;  // 0-based facet index
  std::vector<double> z;
  std::optional<std::vector<Rational>> z_exact;
};

/// Decides y in O_x^o via the dominance pairing s <x, a(y)> <= 1; for
/// hermitian families polarity is taken in the traceless subspace (y is
/// centered first).
MembershipResult polar_membership(const OrbitopeSpec& spec, const DenseMatrix& y,
                                  double eps = 1e-8);

/// a-space polar gauge of a dominant direction d: the coorbitope
/// boundary along d sits at 1 / that value.
double polar_gauge(const OrbitopeSpec& spec, const std::vector<double>& dominant_dir);
/// a-space orbitope gauge: max_j mu_j(d) / mu_j(x).
double orbitope_gauge(const OrbitopeSpec& spec, const std::vector<double>& dominant_dir);

std::vector<ExtremeOrbit> extreme_orbits(const OrbitopeSpec& spec);

/// Both verdicts of the biorbitope criterion: the root-theoretic
/// condition (a single nonzero simple-root value, sitting at a boundary
/// node, root system simple and not D_n (n>=4)), and the facet-orbit
/// count |I(x)| = 1 it is equivalent to. Any disagreement is an anomaly.
struct BiorbitopeReport {
  bool theorem_condition = false;
  bool single_facet_orbit = false;
  bool anomaly = false;
  std::string explanation;
  bool verdict() const { return single_facet_orbit; }
};
BiorbitopeReport is_biorbitope(const OrbitopeSpec& spec);

/// Self-polarity check O_x^o = c * O_x, treated as a hypothesis to
/// verify. Proportional iff dominant(z_i) is a positive multiple of x
/// (exact in rational mode); otherwise a witness portfolio is produced:
/// for every candidate c' on a grid, a direction and radius where the
/// two bodies disagree (validated through the closed-form gauges).
struct SelfPolarityResult {
  bool proportional = false;
  double c = 0;
  std::optional<Rational> c_exact;
  /// The paper-formula constant 1 / (beta_i(x)^2 s |mu_i|^2), reported
  /// for reference in both outcomes.
  double predicted_c = 0;
  struct GridWitness {
    double candidate_c = 0;
    std::vector<double> direction;  // dominant a-direction
    double radius = 0;              // witness point = radius * direction
    bool in_polar = false;
    bool in_scaled_orbitope = false;
  };
  std::vector<double> z_dom;
  std::vector<GridWitness> witnesses;
};
SelfPolarityResult check_self_polarity(const OrbitopeSpec& spec, int grid_points = 25);

/// Rational-coordinates test: is there b with beta_j(x) in Q*b for all
/// j? Exact for exact base points; floats go through continued-fraction
/// reconstruction with denominators up to max_den.
struct RationalityReport {
  bool rational = false;
  std::string base_description;                  // e.g. "b = beta_2(x)"
  std::vector<std::pair<long long, long long>> ratios;  // beta_j / beta_{j*}
};
RationalityReport has_rational_coordinates(const OrbitopeSpec& spec, double tol = 1e-9,
                                           long long max_den = 1000000);

/// Spectrahedral representation of the coorbitope for base points whose
/// pairing <x, .> is carried by a single fundamental weight (exactly one
/// beta_j(x) nonzero). Other rational weights would need Cartan-product
/// representations and raise UnsupportedWeight.
LinearPencil polar_pencil(const OrbitopeSpec& spec, long long size_cap = 20000);

}  // namespace orbitopes

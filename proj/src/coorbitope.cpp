#include "orbitopes/coorbitope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orbitopes {

namespace {

void require_full_dimensional(const OrbitopeSpec& spec) {
  if (!spec.polytope().is_full_dimensional()) {
    throw NotFullDimensional("coorbitope operations require a full-dimensional orbitope");
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

MembershipResult polar_membership(const OrbitopeSpec& spec, const DenseMatrix& y, double eps) {
  require_full_dimensional(spec);
  const auto& fam = spec.family();
  ACoords ay = a_coordinates(fam, y);
  double value = fam.scale * dot(spec.x(), ay.v);
  MembershipResult res;
  res.worst_slack = value - 1.0;
  res.worst_constraint = "support";
  res.tolerance = eps;
  if (res.worst_slack > eps) {
    res.verdict = Verdict::Outside;
  } else if (res.worst_slack >= -eps) {
    res.verdict = Verdict::Boundary;
  } else {
    res.verdict = Verdict::Inside;
  }
  return res;
}

double polar_gauge(const OrbitopeSpec& spec, const std::vector<double>& dominant_dir) {
  return spec.family().scale * dot(spec.x(), dominant_dir);
}

double orbitope_gauge(const OrbitopeSpec& spec, const std::vector<double>& dominant_dir) {
  auto sys = spec.system();
  double g = 0;
  for (int j = 0; j < spec.family().rank; ++j) {
    double denom = sys.mu(j, spec.x());
    g = std::max(g, sys.mu(j, dominant_dir) / denom);
  }
  return g;
}

std::vector<ExtremeOrbit> extreme_orbits(const OrbitopeSpec& spec) {
  require_full_dimensional(spec);
  auto sys = spec.system();
  auto facets = spec.polytope().facet_indices();
  std::vector<ExtremeOrbit> out;
  for (int i : facets) {
    ExtremeOrbit eo;
    eo.index = i;
    if (spec.x_exact()) {
      Rational mu_x(0);
      for (int c = 0; c < sys.ambient(); ++c) mu_x += sys.coweight(i)[c] * (*spec.x_exact())[c];
      Rational s = spec.family().scale == 2.0 ? Rational(2) : Rational(1);
      std::vector<Rational> z(sys.ambient());
      for (int c = 0; c < sys.ambient(); ++c) z[c] = sys.coweight(i)[c] / (s * mu_x);
      eo.z_exact = z;
      for (const auto& v : z) eo.z.push_back(v.to_double());
    } else {
      double mu_x = sys.mu(i, spec.x());
      for (int c = 0; c < sys.ambient(); ++c) {
        eo.z.push_back(sys.coweight(i)[c].to_double() / (spec.family().scale * mu_x));
      }
    }
    out.push_back(std::move(eo));
  }
  return out;
}

BiorbitopeReport is_biorbitope(const OrbitopeSpec& spec) {
  require_full_dimensional(spec);
  const auto& fam = spec.family();
  auto sys = spec.system();
  auto poly = spec.polytope();
  BiorbitopeReport rep;

  // Facet-orbit side.
  auto facets = poly.facet_indices();
  rep.single_facet_orbit = facets.size() == 1;

  // Theorem side: one nonzero beta at a boundary node of a simple,
  // non-D_{>=4} graph.
  auto betas = spec.beta_values();
  double scale = 1.0;
  for (double b : betas) scale = std::max(scale, std::abs(b));
  std::vector<int> nonzero;
  for (int j = 0; j < fam.rank; ++j) {
    if (std::abs(betas[j]) > 1e-9 * scale) nonzero.push_back(j);
  }
  std::string why;
  bool cond = true;
  if (!fam.simple_algebra) {
    cond = false;
    why = "restricted root system is reducible";
  } else if (fam.root_family == RootFamily::D && fam.rank >= 4) {
    cond = false;
    why = "type D_n with n >= 4 is excluded";
  } else if (nonzero.size() != 1) {
    cond = false;
    why = "beta(x) != 0 for " + std::to_string(nonzero.size()) + " simple roots";
  } else {
    std::vector<int> rest;
    for (int j = 0; j < fam.rank; ++j) {
      if (j != nonzero[0]) rest.push_back(j);
    }
    if (!rest.empty() && sys.dynkin_components(rest).size() != 1) {
      cond = false;
      why = "removing the supporting root disconnects the Dynkin graph";
    } else {
      why = "single boundary root beta_" + std::to_string(nonzero[0] + 1) + " carries x";
    }
  }
  rep.theorem_condition = cond;
  rep.anomaly = rep.theorem_condition != rep.single_facet_orbit;
  rep.explanation = why + "; facet orbit count " + std::to_string(facets.size());
  return rep;
}

SelfPolarityResult check_self_polarity(const OrbitopeSpec& spec, int grid_points) {
  auto bio = is_biorbitope(spec);
  if (!bio.verdict()) {
    throw NotBiorbitope("self-polarity is defined for biorbitopes only");
  }
  const auto& fam = spec.family();
  auto sys = spec.system();
  int i = spec.polytope().facet_indices()[0];
  auto zs = extreme_orbits(spec);
  const ExtremeOrbit& zo = zs[0];

  SelfPolarityResult res;
  // Paper formula 1/(beta_i(x)^2 * s * |mu_i|^2), with |mu_i|^2 taken in
  // the ambient dot product (the trace form contributes the factor s).
  double beta_i = spec.beta_values()[i];
  double mu_norm2 = 0;
  for (const auto& c : sys.coweight(i)) mu_norm2 += c.to_double() * c.to_double();
  res.predicted_c = 1.0 / (beta_i * beta_i * fam.scale * mu_norm2);

  // Proportionality test dominant(z_i) = c * x with c > 0.
  if (spec.x_exact() && zo.z_exact) {
    auto zdom = sys.dominant(*zo.z_exact).dominant;
    res.z_dom.clear();
    for (const auto& v : zdom) res.z_dom.push_back(v.to_double());
    const auto& x = *spec.x_exact();
    std::optional<Rational> ratio;
    bool prop = true;
    for (int c = 0; c < sys.ambient(); ++c) {
      if (x[c].is_zero() && zdom[c].is_zero()) continue;
      if (x[c].is_zero() != zdom[c].is_zero()) {
        prop = false;
        break;
      }
      Rational r = zdom[c] / x[c];
      if (!ratio) {
        ratio = r;
      } else if (*ratio != r) {
        prop = false;
        break;
      }
    }
    if (prop && ratio && ratio->sign() > 0) {
      res.proportional = true;
      res.c_exact = *ratio;
      res.c = ratio->to_double();
      return res;
    }
  } else {
    auto zdom = sys.dominant(zo.z).dominant;
    res.z_dom = zdom;
    std::optional<double> ratio;
    bool prop = true;
    double xs = 0;
    for (double v : spec.x()) xs = std::max(xs, std::abs(v));
    for (int c = 0; c < sys.ambient(); ++c) {
      if (std::abs(spec.x()[c]) <= 1e-12 * xs) {
        if (std::abs(zdom[c]) > 1e-9 * xs) prop = false;
        continue;
      }
      double r = zdom[c] / spec.x()[c];
      if (!ratio) {
        ratio = r;
      } else if (std::abs(r - *ratio) > 1e-9 * std::max(1.0, std::abs(*ratio))) {
        prop = false;
      }
    }
    if (prop && ratio && *ratio > 0) {
      res.proportional = true;
      res.c = *ratio;
      return res;
    }
  }

  // Not proportional: produce, for each candidate c' on a geometric
  // grid, a direction where the polar body and c' * O_x have different
  // boundary radii, and a point between the two boundaries.
  if (res.z_dom.empty()) res.z_dom = sys.dominant(zo.z).dominant;
  std::vector<std::vector<double>> directions;
  directions.push_back(spec.x());
  directions.push_back(res.z_dom);
  for (int j = 0; j < fam.rank; ++j) {
    std::vector<double> h(sys.ambient());
    for (int c = 0; c < sys.ambient(); ++c) h[c] = sys.coweight(j)[c].to_double();
    directions.push_back(sys.dominant(h).dominant);
  }
  double c_lo = std::numeric_limits<double>::infinity();
  double c_hi = 0;
  for (const auto& d : directions) {
    double pg = polar_gauge(spec, d);
    double og = orbitope_gauge(spec, d);
    if (pg <= 0 || og <= 0) continue;
    double r = og / pg;  // the c' that would make the bodies agree along d
    c_lo = std::min(c_lo, r);
    c_hi = std::max(c_hi, r);
  }
  c_lo /= 2;
  c_hi *= 2;
  for (int g = 0; g < grid_points; ++g) {
    double t = grid_points == 1 ? 0.5 : static_cast<double>(g) / (grid_points - 1);
    double cand = c_lo * std::pow(c_hi / c_lo, t);
    SelfPolarityResult::GridWitness w;
    w.candidate_c = cand;
    // Find a direction whose polar radius 1/pg differs from the scaled
    // orbitope radius cand/og; put the witness point in between.
    for (const auto& d : directions) {
      double pg = polar_gauge(spec, d);
      double og = orbitope_gauge(spec, d);
      double r_polar = 1.0 / pg;
      double r_orb = cand / og;
      if (std::abs(r_polar - r_orb) <= 1e-7 * std::max(r_polar, r_orb)) continue;
      w.direction = d;
      w.radius = 0.5 * (r_polar + r_orb);
      w.in_polar = w.radius * pg <= 1.0;
      w.in_scaled_orbitope = w.radius * og <= cand;
      break;
    }
    if (!w.direction.empty()) res.witnesses.push_back(std::move(w));
  }
  return res;
}

namespace {

// Continued-fraction rational reconstruction of v with denominator cap.
// A convergent p/q is only accepted when it is anomalously good
// (error << 1/q^2); any real number has convergents within O(1)/q^2, so
// the tolerance alone cannot distinguish quadratic irrationals like
// sqrt(2)+1 from true rationals.
std::optional<std::pair<long long, long long>> to_rational(double v, double tol,
                                                           long long max_den) {
  double x = v;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(x);
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    double err = std::abs(approx - v);
    double qd = static_cast<double>(q1);
    if (err <= tol * std::max(1.0, std::abs(v)) && err <= 0.01 / (qd * qd)) {
      return std::make_pair(p1, q1);
    }
    double frac = x - fl;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace

RationalityReport has_rational_coordinates(const OrbitopeSpec& spec, double tol,
                                           long long max_den) {
  RationalityReport rep;
  auto betas = spec.beta_values();
  if (spec.x_exact()) {
    rep.rational = true;
    rep.base_description = "exact rational base point";
    auto exact_betas = spec.system().simple_root_values(*spec.x_exact());
    int pivot = -1;
    for (int j = 0; j < spec.family().rank; ++j) {
      if (!exact_betas[j].is_zero()) {
        pivot = j;
        break;
      }
    }
    for (int j = 0; j < spec.family().rank; ++j) {
      if (pivot < 0) {
        rep.ratios.emplace_back(0, 1);
      } else {
        Rational r = exact_betas[j] / exact_betas[pivot];
        rep.ratios.emplace_back(r.num(), r.den());
      }
    }
    return rep;
  }
  double scale = 1.0;
  for (double b : betas) scale = std::max(scale, std::abs(b));
  int pivot = -1;
  for (int j = 0; j < spec.family().rank; ++j) {
    if (std::abs(betas[j]) > 1e-9 * scale) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) {
    rep.rational = true;  // x = 0 trivially
    rep.base_description = "all beta-values vanish";
    return rep;
  }
  rep.rational = true;
  rep.base_description = "b = beta_" + std::to_string(pivot + 1) + "(x)";
  for (int j = 0; j < spec.family().rank; ++j) {
    double ratio = betas[j] / betas[pivot];
    if (std::abs(ratio) <= 1e-9) {
      rep.ratios.emplace_back(0, 1);
      continue;
    }
    auto rec = to_rational(ratio, tol, max_den);
    if (!rec) {
      rep.rational = false;
      rep.ratios.emplace_back(0, 0);
    } else {
      rep.ratios.push_back(*rec);
    }
  }
  return rep;
}

LinearPencil polar_pencil(const OrbitopeSpec& spec, long long size_cap) {
  require_full_dimensional(spec);
  const auto& fam = spec.family();
  auto rat = has_rational_coordinates(spec);
  if (!rat.rational) {
    throw UnsupportedWeight(
        "polar pencil needs rational coordinates: some beta-value ratio is irrational");
  }
  auto betas = spec.beta_values();
  double scale = 1.0;
  for (double b : betas) scale = std::max(scale, std::abs(b));
  std::vector<int> nonzero;
  for (int j = 0; j < fam.rank; ++j) {
    if (std::abs(betas[j]) > 1e-9 * scale) nonzero.push_back(j);
  }
  if (nonzero.size() != 1) {
    std::string pattern;
    for (int j = 0; j < fam.rank; ++j) {
      pattern += (std::abs(betas[j]) > 1e-9 * scale) ? '1' : '0';
    }
    throw UnsupportedWeight(
        "polar pencil supports a single nonzero beta_j(x); pattern " + pattern +
        " would need the Cartan product of the corresponding fundamental representations, "
        "which is not implemented");
  }
  int j = nonzero[0];
  FundamentalBlock fb = fundamental_block(fam, j, /*centered=*/true, size_cap);
  fb.block.level = fb.mu_multiplier / (fam.scale * betas[j]);
  std::vector<PencilBlock> blocks;
  blocks.push_back(std::move(fb.block));
  return LinearPencil(fam, std::move(blocks));
}

}  // namespace orbitopes

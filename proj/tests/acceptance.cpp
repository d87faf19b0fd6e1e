// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "orbitopes/json_io.hpp"
#include "orbitopes/rng.hpp"
#include "orbitopes/spin.hpp"
#include "orbitopes/verify.hpp"

using namespace orbitopes;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> run;
  double budget_seconds = 0;  // 0 = no stated budget
};

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

// ---------------------------------------------------------------- 1
bool exterior_power_spectrum(std::string& note) {
  Rng rng(1001);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    CMat a = random_hermitian(6, rng);
    auto base = eig_hermitian_values(a);
    for (int k : {2, 3}) {
      auto got = eig_hermitian_values(exterior_power_additive(a, k));
      std::vector<double> expect;
      for (const auto& subset : k_subsets(6, k)) {
        double s = 0;
        for (int i : subset) s += base[i];
        expect.push_back(s);
      }
      std::sort(expect.begin(), expect.end(), std::greater<>());
      for (std::size_t i = 0; i < got.size(); ++i) {
        worst = std::max(worst, std::abs(got[i] - expect[i]));
      }
    }
  }
  note = "max |eig(L^k A) - subset sums| = " + std::to_string(worst);
  return worst <= 1e-9;
}

// ---------------------------------------------------------------- 2
bool ky_fan_lmi(std::string& note) {
  auto fam = make_family(FamilyTag::RectComplex, 4, 3);
  Rng rng(2002);
  int band = 0, checked = 0, disagreements = 0;
  for (int k : {1, 2, 3}) {
    auto pencil = ky_fan_ball_pencil(Field::C, 4, 3, k, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
      auto d = random_model_element(fam, rng);
      double norm = ky_fan_norm(d, k);
      double t = (0.4 + 1.2 * rng.uniform()) / std::max(norm, 1e-12);
      DenseMatrix y = t * d;
      double oracle = ky_fan_norm(y, k) - 1.0;
      if (std::abs(oracle) <= 1e-7) {
        ++band;
        continue;
      }
      bool feasible = pencil.feasibility(y).min_eigenvalue >= 0;
      if (feasible != (oracle <= 0)) ++disagreements;
      ++checked;
    }
  }
  note = std::to_string(checked) + " checked, " + std::to_string(band) + " in band, " +
         std::to_string(disagreements) + " disagreements";
  return disagreements == 0 && checked >= 1200;
}

// ---------------------------------------------------------------- 3
bool kostant_projection(std::string& note) {
  struct Inst {
    FamilyTag tag;
    int m, n;
    std::vector<double> x;
  };
  std::vector<Inst> instances = {
      {FamilyTag::RectReal, 5, 4, {4, 3, 2, 1}},
      {FamilyTag::RectComplex, 5, 4, {3, 2, 1, 0.5}},
      {FamilyTag::RectQuat, 4, 3, {3, 1.5, 1}},
      {FamilyTag::SquareRealSpecial, 4, 4, {3, 2, 1, 0.5}},
      {FamilyTag::HermReal, 4, 4, {2, 1, 0, -3}},
      {FamilyTag::HermComplex, 4, 4, {3, 1, 0, -4}},  // Schur-Horn instance
      {FamilyTag::HermQuat, 4, 4, {2, 1, -1, -2}},
      {FamilyTag::SkewReal, 7, 7, {3, 2, 1}},
      {FamilyTag::SkewReal, 8, 8, {3, 2, 1, 0.5}},
      {FamilyTag::SkewQuat, 4, 4, {4, 2, 1, 0.5}},
      {FamilyTag::SymComplex, 4, 4, {3, 2, 1, 0.5}},
      {FamilyTag::SkewSymComplex, 8, 8, {3, 2, 1, 0.5}},
  };
  double worst = -1e300;
  double vertex_worst = 0;
  for (const auto& inst : instances) {
    auto fam = make_family(inst.tag, inst.m, inst.n);
    auto spec = OrbitopeSpec::from_a_coords(fam, inst.x);
    auto rep = verify_kostant(spec, 1000, 3003);
    if (!rep.pass) {
      note = "family " + fam.name() + " failed: " + rep.to_text();
      return false;
    }
    for (const auto& [k, v] : rep.details) {
      if (k == "sample_max_slack") worst = std::max(worst, std::stod(v));
      if (k == "vertex_max_slack") vertex_worst = std::max(vertex_worst, std::stod(v));
    }
  }
  note = "12 instances x 1000 samples, max slack " + std::to_string(worst) +
         ", vertex slack " + std::to_string(vertex_worst);
  return worst <= 1e-9 && vertex_worst <= 1e-12;
}

// ---------------------------------------------------------------- 4
bool catalog_vs_polytope(std::string& note) {
  struct Inst {
    FamilyTag tag;
    int m, n;
    std::vector<double> x;
  };
  std::vector<Inst> instances = {
      {FamilyTag::RectReal, 4, 3, {3, 2, 1}},
      {FamilyTag::RectComplex, 4, 3, {2, 1, 0.5}},
      {FamilyTag::RectQuat, 3, 3, {2, 1, 0.5}},
      {FamilyTag::SquareRealSpecial, 3, 3, {2, 1, 0.5}},
      {FamilyTag::HermReal, 3, 3, {2, 0, -2}},
      {FamilyTag::HermComplex, 3, 3, {2, 1, -3}},
      {FamilyTag::HermQuat, 3, 3, {1, 0, -1}},
      {FamilyTag::SkewReal, 6, 6, {2, 1, 0.5}},
      {FamilyTag::SkewReal, 7, 7, {2, 1, 0.5}},
      {FamilyTag::SkewQuat, 3, 3, {2, 1, 0.5}},
      {FamilyTag::SymComplex, 3, 3, {2, 1, 0.5}},
      {FamilyTag::SkewSymComplex, 6, 6, {2, 1, 0.5}},
  };
  int disagreements = 0;
  int total = 0;
  Rng rng(4004);
  for (const auto& inst : instances) {
    auto fam = make_family(inst.tag, inst.m, inst.n);
    auto spec = OrbitopeSpec::from_a_coords(fam, inst.x);
    auto poly = spec.polytope();
    auto samples = orbit_sample(spec, 1000, 4040);
    for (const auto& s : samples) {
      double t = 0.5 + 1.1 * rng.uniform();
      DenseMatrix y = t * s;
      if (fam.is_herm_family()) {
        std::vector<double> cc(fam.n, spec.trace() / fam.n);
        auto centroid = embed_a(fam, cc);
        y = centroid + (t * (s - centroid));
      }
      auto mem = membership(spec, y, 1e-8);
      if (mem.verdict == Verdict::Boundary || std::abs(mem.worst_slack) <= 1e-7) continue;
      bool slow = poly.contains_bruteforce(a_coordinates(fam, y).v, 1000000, 1e-9);
      if ((mem.verdict == Verdict::Inside) != slow) ++disagreements;
      ++total;
    }
  }
  note = std::to_string(total) + " off-band points, " + std::to_string(disagreements) +
         " disagreements";
  return disagreements == 0 && total >= 9000;
}

// ---------------------------------------------------------------- 5
bool conv_so(std::string& note) {
  double worst_feasible = 0;
  double worst_slack_err = 0;
  for (int n : {3, 4, 5}) {
    auto pencil = conv_so_pencil(n);
    Rng rng(5000 + n);
    for (int s = 0; s < 500; ++s) {
      auto g = haar_orthogonal(n, rng);
      double mn = pencil.feasibility(g).min_eigenvalue;
      worst_feasible = std::max(worst_feasible, -mn);
    }
    RMat refl(n, n);
    for (int i = 0; i < n; ++i) refl.at(i, i) = (i + 1 == n) ? -1.0 : 1.0;
    auto f = pencil.feasibility(DenseMatrix::real(refl));
    worst_slack_err = std::max(worst_slack_err, std::abs(f.min_eigenvalue - (-1.0)));
    if (f.worst_kind != "half_spin_minus") {
      note = "reflection slack not on the half-spin block at n=" + std::to_string(n);
      return false;
    }
  }
  note = "max sample violation " + std::to_string(worst_feasible) +
         ", reflection slack error " + std::to_string(worst_slack_err);
  return worst_feasible <= 1e-9 && worst_slack_err <= 1e-9;
}

// ---------------------------------------------------------------- 6
bool so_polar(std::string& note) {
  int disagreements = 0, total = 0;
  for (int n : {3, 4}) {
    auto pencil = so_polar_pencil(n);
    auto fam = make_family(FamilyTag::SquareRealSpecial, n, n);
    auto spec = OrbitopeSpec::from_a_coords(fam, std::vector<double>(n, 1.0));
    Rng rng(6000 + n);
    for (int s = 0; s < 500; ++s) {
      auto d = random_model_element(fam, rng);
      double h = support_function(spec, d);
      if (std::abs(h) < 1e-9) continue;
      double t = (0.3 + 1.4 * rng.uniform()) / h;
      DenseMatrix y = t * d;
      auto pm = polar_membership(spec, y);
      double slack = pencil.feasibility(y).min_eigenvalue;
      if (std::abs(pm.worst_slack) <= 1e-7 || std::abs(slack) <= 1e-7) continue;
      if ((slack >= 0) != (pm.verdict == Verdict::Inside)) ++disagreements;
      ++total;
    }
  }
  note = std::to_string(total) + " off-band points, " + std::to_string(disagreements) +
         " disagreements";
  return disagreements == 0 && total >= 800;
}

// ---------------------------------------------------------------- 7
bool operator_nuclear(std::string& note) {
  auto fam = make_family(FamilyTag::RectReal, 4, 3);
  auto spec = OrbitopeSpec::from_a_coords(fam, {1, 1, 1});
  auto zs = extreme_orbits(spec);
  if (zs.size() != 1 || zs[0].z != std::vector<double>{1, 0, 0}) {
    note = "extreme orbit is not the single point (1,0,0)";
    return false;
  }
  Rng rng(7007);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto d = random_model_element(fam, rng);
    double nuclear = ky_fan_norm(d, 3);
    double t = (0.3 + 1.4 * rng.uniform()) / std::max(nuclear, 1e-12);
    DenseMatrix y = t * d;
    // The polar support value must equal the nuclear norm exactly.
    auto pm = polar_membership(spec, y);
    double oracle = ky_fan_norm(y, 3) - 1.0;
    worst = std::max(worst, std::abs(pm.worst_slack - oracle));
  }
  note = "max |polar slack - (nuclear - 1)| = " + std::to_string(worst);
  return worst <= 1e-9;
}

// ---------------------------------------------------------------- 8
bool two_orbit_polar(std::string& note) {
  auto fam = make_family(FamilyTag::SquareRealSpecial, 4, 4);
  auto spec = OrbitopeSpec::from_a_coords_exact(fam, std::vector<Rational>(4, Rational(1)));
  auto zs = extreme_orbits(spec);
  bool points_ok = zs.size() == 2 && zs[0].z == std::vector<double>{1, 0, 0, 0} &&
                   zs[1].z == std::vector<double>{0.5, 0.5, 0.5, -0.5};
  if (!points_ok) {
    note = "extreme orbits differ from {(1,0,0,0), (1,1,1,-1)/2}";
    return false;
  }
  auto rep = verify_duality(spec, 200, 8008, 1e-6);
  note = "extreme orbits exact; " + rep.to_text();
  while (!note.empty() && note.back() == '\n') note.pop_back();
  return rep.pass;
}

// ---------------------------------------------------------------- 9
bool biorbitope_sweep(std::string& note) {
  struct Probe {
    FamilyTag tag;
    int m, n;
  };
  std::vector<Probe> probes = {
      {FamilyTag::RectReal, 7, 6},          {FamilyTag::RectComplex, 7, 6},
      {FamilyTag::RectComplex, 6, 6},       {FamilyTag::RectQuat, 7, 6},
      {FamilyTag::RectQuat, 6, 6},          {FamilyTag::SquareRealSpecial, 6, 6},
      {FamilyTag::HermReal, 7, 7},          {FamilyTag::HermComplex, 7, 7},
      {FamilyTag::HermQuat, 7, 7},          {FamilyTag::SkewReal, 13, 13},
      {FamilyTag::SkewReal, 12, 12},        {FamilyTag::SkewQuat, 6, 6},
      {FamilyTag::SymComplex, 6, 6},        {FamilyTag::SkewSymComplex, 12, 12},
      {FamilyTag::SkewSymComplex, 13, 13},
  };
  int patterns = 0, anomalies = 0;
  for (const auto& probe : probes) {
    auto fam = make_family(probe.tag, probe.m, probe.n);
    auto sys = fam.system();
    for (int mask = 1; mask < (1 << fam.rank); ++mask) {
      std::vector<double> x(sys.ambient(), 0.0);
      for (int j = 0; j < fam.rank; ++j) {
        if (!(mask & (1 << j))) continue;
        for (int c = 0; c < sys.ambient(); ++c) x[c] += sys.coweight(j)[c].to_double();
      }
      auto spec = OrbitopeSpec::from_a_coords(fam, x);
      if (!spec.polytope().is_full_dimensional()) continue;
      ++patterns;
      if (is_biorbitope(spec).anomaly) ++anomalies;
    }
  }
  note = std::to_string(patterns) + " beta patterns, " + std::to_string(anomalies) +
         " anomalies";
  return anomalies == 0 && patterns >= 500;
}

// ---------------------------------------------------------------- 10
bool self_polarity_audit(std::string& note) {
  // Rank-1 instances: Proportional with c = 1/<x,x>.
  {
    auto fam = make_family(FamilyTag::RectReal, 2, 1);
    auto spec = OrbitopeSpec::from_a_coords_exact(fam, {Rational(2)});
    auto res = check_self_polarity(spec);
    auto base = base_matrix(spec);
    double xx = DenseMatrix::trace_form(base, base);
    if (!res.proportional || std::abs(res.c - 1.0 / xx) > 1e-12) {
      note = "rank-1 instance not proportional with c = 1/<x,x>";
      return false;
    }
  }
  // Operator ball over B_2: NotProportional with verified witnesses.
  auto fam = make_family(FamilyTag::RectReal, 3, 2);
  auto spec = OrbitopeSpec::from_a_coords_exact(fam, {Rational(1), Rational(1)});
  auto res = check_self_polarity(spec);
  if (res.proportional) {
    note = "operator ball over B_2 reported proportional";
    return false;
  }
  if (res.witnesses.empty()) {
    note = "no grid witnesses produced";
    return false;
  }
  int verified = 0;
  for (const auto& w : res.witnesses) {
    if (w.in_polar == w.in_scaled_orbitope) {
      note = "witness fails to separate at c' = " + std::to_string(w.candidate_c);
      return false;
    }
    // Replay through the membership oracles.
    auto y = embed_a(fam, {w.radius * w.direction[0], w.radius * w.direction[1]});
    bool in_polar = polar_membership(spec, y).verdict != Verdict::Outside;
    bool in_scaled = membership(spec, (1.0 / w.candidate_c) * y).verdict != Verdict::Outside;
    if (in_polar != w.in_polar || in_scaled != w.in_scaled_orbitope) {
      note = "witness replay disagrees with the oracles";
      return false;
    }
    ++verified;
  }
  note = std::to_string(verified) +
         " grid witnesses verified; discrepancy expected per the self-polarity open "
         "question (theorem proof assumes beta_i(x) != 0 at the facet index)";
  return true;
}

// ---------------------------------------------------------------- 11
bool determinism(std::string& note) {
  auto sq = make_family(FamilyTag::SquareRealSpecial, 4, 4);
  auto so4 = OrbitopeSpec::from_a_coords(sq, {1, 1, 1, 1});
  auto rr = make_family(FamilyTag::RectReal, 4, 3);
  auto ball = OrbitopeSpec::from_a_coords(rr, {1, 1, 1});
  int compared = 0;
  for (std::uint64_t seed : {0ull, 17ull}) {
    for (const auto* spec : {&so4, &ball}) {
      if (verify_kostant(*spec, 100, seed).to_json().dump() !=
          verify_kostant(*spec, 100, seed).to_json().dump()) {
        note = "kostant report differs across identical seeds";
        return false;
      }
      if (verify_duality(*spec, 80, seed).to_json().dump() !=
          verify_duality(*spec, 80, seed).to_json().dump()) {
        note = "duality report differs across identical seeds";
        return false;
      }
      if (verify_face_support(*spec, seed).to_json().dump() !=
          verify_face_support(*spec, seed).to_json().dump()) {
        note = "face report differs across identical seeds";
        return false;
      }
      compared += 3;
    }
  }
  note = std::to_string(compared) + " report pairs bit-identical";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "exterior-power spectrum vs subset sums", exterior_power_spectrum, 5},
      {2, "Ky Fan LMI vs norm oracle, M_{4x3}(C)", ky_fan_lmi, 30},
      {3, "Kostant projection, one spec per family", kostant_projection, 60},
      {4, "catalog membership vs brute-force polytope oracle", catalog_vs_polytope, 0},
      {5, "conv SO(n) pencil, n = 3,4,5", conv_so, 0},
      {6, "SO(n) polar pencil vs polar membership, n = 3,4", so_polar, 0},
      {7, "operator/nuclear duality, RectReal 4x3", operator_nuclear, 0},
      {8, "two-orbit polar of SO(4) with Frank-Wolfe certificates", two_orbit_polar, 0},
      {9, "biorbitope sweep, every family, rank <= 6", biorbitope_sweep, 5},
      {10, "self-polarity audit", self_polarity_audit, 0},
      {11, "verification reports are deterministic", determinism, 0},
  };
  int failures = 0;
  for (auto& crit : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = crit.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = crit.budget_seconds == 0 || secs <= crit.budget_seconds;
    if (!in_budget) {
      note += " [over budget of " + std::to_string(crit.budget_seconds) + "s]";
    }
    bool pass = ok && in_budget;
    std::printf("criterion %02d %s %.2fs  %s  (%s)\n", crit.number, pass ? "PASS" : "FAIL",
                secs, crit.title.c_str(), note.c_str());
    if (!pass) ++failures;
  }
  if (failures == 0) {
    std::printf("ACCEPTANCE: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("ACCEPTANCE: %d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}

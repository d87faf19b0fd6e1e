#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbitopes/coorbitope.hpp"
#include "orbitopes/orbitope.hpp"

namespace orbitopes {

/// Outcome of one randomized verification run. Reports are fully
/// deterministic: rerunning with the same seed reproduces every field
/// bit-exactly.
struct VerificationReport {
  std::string name;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0;
  double max_violation = 0;
  bool pass = false;
  /// Ordered key/value detail rows (worst witnesses, counters).
  std::vector<std::pair<std::string, std::string>> details;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Kostant projection check pi(Kx) subset P_x on orbit samples, plus
/// exact vertex attainment through the Weyl embeddings.
VerificationReport verify_kostant(const OrbitopeSpec& spec, int count, std::uint64_t seed,
                                  double tol = 1e-9);

/// Frank-Wolfe membership certificate for a point of a against the
/// convex hull of a union of Weyl orbits (given by dominant
/// representatives). The linear maximization oracle is the closed-form
/// dominance rearrangement, so Separated verdicts are certificates.
struct HullResult {
  enum class Status { Member, Separated, Undecided };
  Status status = Status::Undecided;
  double distance = 0;
  int iterations = 0;
  /// Member: the convex combination over visited orbit points.
  std::vector<std::pair<std::vector<double>, double>> weights;
  /// Separated: direction d with <d, y> > h(d) + margin.
  std::vector<double> direction;
  double separation = 0;
};
HullResult hull_certificate(const RestrictedRootSystem& sys,
                            const std::vector<std::vector<double>>& generators,
                            const std::vector<double>& y, double eps = 1e-6,
                            int max_iter = 10000);

/// Polarity round-trip: polar_membership against (a) the sampled support
/// sup <gx, y> <= 1 and (b) the Frank-Wolfe certificate over
/// conv(union K z_i), with Separated directions re-checked against the
/// closed-form support function.
VerificationReport verify_duality(const OrbitopeSpec& spec, int count, std::uint64_t seed,
                                  double eps = 1e-6);

/// Face correspondence at the level of supporting functionals: each
/// z_i supports O_x with equality exactly on the facet's Weyl vertices,
/// and those vertices span an affine space of dimension rank-1.
VerificationReport verify_face_support(const OrbitopeSpec& spec, std::uint64_t seed);

}  // namespace orbitopes

// Command-line front end: describe catalog specs, run membership
// oracles, export pencils, run the verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "orbitopes/json_io.hpp"
#include "orbitopes/pencil.hpp"
#include "orbitopes/verify.hpp"

using namespace orbitopes;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitOutside = 2;
constexpr int kExitShape = 3;
constexpr int kExitNotFullDim = 4;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open " + out_path + " for writing");
  out << text;
}

int run_describe(const std::string& spec_path, const std::string& format,
                 const std::string& out_path) {
  auto spec = load_spec_file(spec_path);
  if (format == "json") {
    write_output(describe_json(spec).dump(2), out_path);
  } else {
    write_output(describe_text(spec), out_path);
  }
  return kExitOk;
}

int run_member(const std::string& spec_path, const std::string& y_path,
               const std::string& which, double tol, const std::string& format,
               const std::string& out_path) {
  auto spec = load_spec_file(spec_path);
  auto y = load_matrix_file(y_path);
  MembershipResult res;
  if (which == "orbitope") {
    res = membership(spec, y, tol);
  } else if (which == "polar") {
    res = polar_membership(spec, y, tol);
  } else if (which == "pencil") {
    auto pencil = orbitope_pencil(spec);
    auto f = pencil.feasibility(y);
    // Pencil slack is the minimum eigenvalue of the slack matrix:
    // negative means infeasible.
    res.worst_slack = f.min_eigenvalue;
    res.worst_constraint = f.worst_kind;
    res.tolerance = tol;
    res.verdict = f.min_eigenvalue < -tol
                      ? Verdict::Outside
                      : (f.min_eigenvalue <= tol ? Verdict::Boundary : Verdict::Inside);
  } else {
    throw CLI::ValidationError("--which must be orbitope, polar or pencil");
  }
  if (format == "json") {
    write_output(membership_to_json(res).dump(2), out_path);
  } else {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s (worst constraint %s, slack %.12g)",
                  verdict_name(res.verdict).c_str(), res.worst_constraint.c_str(),
                  res.worst_slack);
    write_output(buf, out_path);
  }
  return res.verdict == Verdict::Outside ? kExitOutside : kExitOk;
}

int run_export(const std::string& spec_path, const std::string& target,
               const std::string& format, const std::string& out_path) {
  auto spec = load_spec_file(spec_path);
  LinearPencil pencil =
      target == "polar" ? polar_pencil(spec) : orbitope_pencil(spec);
  if (format == "json") {
    write_output(pencil_metadata(pencil).dump(2), out_path);
    return kExitOk;
  }
  // Block summary accompanies the SDPA file.
  std::cerr << pencil_metadata(pencil).dump(2) << "\n";
  pencil.materialize();
  bool needs_realify = false;
  for (const auto& block : pencil.blocks()) {
    for (const auto& coeff : block.coeffs) {
      for (int r = 0; r < coeff.rows() && !needs_realify; ++r) {
        for (int c = 0; c < coeff.cols(); ++c) {
          if (coeff.at(r, c).imag() != 0.0) {
            needs_realify = true;
            break;
          }
        }
      }
    }
  }
  if (needs_realify) {
    pencil.realify().export_sdpa(out_path);
  } else {
    pencil.export_sdpa(out_path);
  }
  return kExitOk;
}

int run_verify(const std::string& spec_path, const std::string& suite, int samples,
               std::uint64_t seed, const std::string& format, const std::string& out_path) {
  auto spec = load_spec_file(spec_path);
  std::vector<VerificationReport> reports;
  if (suite == "kostant" || suite == "all") {
    reports.push_back(verify_kostant(spec, samples, seed));
  }
  if (suite == "duality" || suite == "all") {
    reports.push_back(verify_duality(spec, samples, seed));
  }
  if (suite == "faces" || suite == "all") {
    reports.push_back(verify_face_support(spec, seed));
  }
  if (reports.empty()) {
    throw CLI::ValidationError("--suite must be kostant, duality, faces or all");
  }
  bool all_pass = true;
  std::string text;
  json jreports = json::array();
  for (const auto& rep : reports) {
    all_pass = all_pass && rep.pass;
    text += rep.to_text();
    jreports.push_back(rep.to_json());
  }
  write_output(format == "json" ? jreports.dump(2) : text, out_path);
  return all_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar orbitope toolkit: membership oracles, LMI export, verification"};
  app.require_subcommand(1);

  std::string spec_path, y_path, out_path;
  std::string which = "orbitope", target = "orbitope", format = "text", suite = "all";
  double tol = 1e-8;
  int samples = 200;
  std::uint64_t seed = 0;

  auto* describe = app.add_subcommand("describe", "root system, facets, polar data of a spec");
  describe->add_option("--spec", spec_path, "spec JSON file")->required();
  describe->add_option("--format", format, "text|json");
  describe->add_option("--out", out_path, "output path (stdout default)");

  auto* member = app.add_subcommand("member", "membership verdict for a matrix");
  member->add_option("--spec", spec_path)->required();
  member->add_option("--y", y_path, "matrix JSON file")->required();
  member->add_option("--which", which, "orbitope|polar|pencil");
  member->add_option("--tol", tol, "boundary band width");
  member->add_option("--format", format, "text|json");
  member->add_option("--out", out_path);

  auto* exportc = app.add_subcommand("export", "write the LMI as SDPA sparse or JSON metadata");
  exportc->add_option("--spec", spec_path)->required();
  exportc->add_option("--target", target, "orbitope|polar");
  exportc->add_option("--format", format, "sdpa|json")->required();
  exportc->add_option("--out", out_path)->required();

  auto* verify = app.add_subcommand("verify", "randomized verification suites");
  verify->add_option("--spec", spec_path)->required();
  verify->add_option("--suite", suite, "kostant|duality|faces|all");
  verify->add_option("--samples", samples, "sample count");
  verify->add_option("--seed", seed, "RNG seed (default 0)");
  verify->add_option("--format", format, "text|json");
  verify->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (describe->parsed()) return run_describe(spec_path, format, out_path);
    if (member->parsed()) return run_member(spec_path, y_path, which, tol, format, out_path);
    if (exportc->parsed()) return run_export(spec_path, target, format, out_path);
    if (verify->parsed()) return run_verify(spec_path, suite, samples, seed, format, out_path);
  } catch (const NotFullDimensional& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotFullDim;
  } catch (const ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitShape;
  } catch (const SymmetryViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitShape;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitShape;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitFail;
}

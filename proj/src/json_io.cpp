#include "orbitopes/json_io.hpp"

#include <fstream>
#include <sstream>

namespace orbitopes {

namespace {

Field field_from_letter(const std::string& s) {
  if (s == "R") return Field::R;
  if (s == "C") return Field::C;
  if (s == "H") return Field::H;
  throw ParseError("unknown field letter: " + s);
}

void entry_from_json(const json& e, Field f, double out[4]) {
  out[0] = out[1] = out[2] = out[3] = 0;
  if (e.is_number()) {
    out[0] = e.get<double>();
    return;
  }
  if (!e.is_array()) throw ParseError("matrix entry must be a number or an array");
  int expected = f == Field::C ? 2 : 4;
  if (static_cast<int>(e.size()) > expected) {
    throw ParseError("matrix entry has too many components for field");
  }
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i].get<double>();
}

}  // namespace

DenseMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    throw ParseError("matrix needs rows, cols and entries");
  }
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  Field f = field_from_letter(j.value("field", "R"));
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) {
    throw ParseError("entries row count does not match rows");
  }
  DenseMatrix m = DenseMatrix::zero(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = entries[r];
    if (static_cast<int>(row.size()) != cols) {
      throw ParseError("entries column count does not match cols");
    }
    for (int c = 0; c < cols; ++c) {
      double comp[4];
      entry_from_json(row[c], f, comp);
      m.set_entry(r, c, comp);
    }
  }
  return m;
}

json matrix_to_json(const DenseMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["field"] = field_name(m.field());
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      double comp[4];
      m.entry_components(r, c, comp);
      switch (m.field()) {
        case Field::R:
          row.push_back(comp[0]);
          break;
        case Field::C:
          row.push_back(json::array({comp[0], comp[1]}));
          break;
        case Field::H:
          row.push_back(json::array({comp[0], comp[1], comp[2], comp[3]}));
          break;
      }
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

OrbitopeSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  if (!j.contains("family")) throw ParseError("spec needs a \"family\" field");
  FamilyTag tag = family_tag_from_name(j.at("family").get<std::string>());
  int n = j.value("n", 0);
  int m = j.value("m", n);
  if (n <= 0) throw ParseError("spec needs a positive \"n\"");
  OrbitopeFamily fam = make_family(tag, m, n);
  if (j.contains("m") && fam.m != m) {
    throw ParseError("family " + fam.name() + " is square; omit \"m\" or set it equal to n");
  }
  if (j.contains("field")) {
    Field f = field_from_letter(j.at("field").get<std::string>());
    if (f != fam.field) {
      throw ParseError("field \"" + j.at("field").get<std::string>() +
                       "\" does not match family " + fam.name());
    }
  }
  if (j.contains("x_matrix")) {
    return OrbitopeSpec::from_matrix(fam, matrix_from_json(j.at("x_matrix")));
  }
  if (!j.contains("x")) throw ParseError("spec needs \"x\" (a-coordinates) or \"x_matrix\"");
  const json& x = j.at("x");
  if (!x.is_array()) throw ParseError("\"x\" must be an array");
  bool exact = true;
  for (const auto& e : x) {
    if (!(e.is_number_integer() || e.is_string())) exact = false;
  }
  if (exact) {
    std::vector<Rational> coords;
    for (const auto& e : x) {
      if (e.is_string()) {
        coords.push_back(Rational::parse(e.get<std::string>()));
      } else {
        coords.push_back(Rational(e.get<long long>()));
      }
    }
    return OrbitopeSpec::from_a_coords_exact(fam, std::move(coords));
  }
  std::vector<double> coords;
  for (const auto& e : x) {
    if (e.is_string()) {
      coords.push_back(Rational::parse(e.get<std::string>()).to_double());
    } else {
      coords.push_back(e.get<double>());
    }
  }
  return OrbitopeSpec::from_a_coords(fam, std::move(coords));
}

json spec_to_json(const OrbitopeSpec& spec) {
  json j;
  j["family"] = spec.family().name();
  j["field"] = field_name(spec.family().field);
  j["m"] = spec.family().m;
  j["n"] = spec.family().n;
  if (spec.x_exact()) {
    json x = json::array();
    for (const auto& v : *spec.x_exact()) x.push_back(v.str());
    j["x"] = std::move(x);
  } else {
    j["x"] = spec.x();
  }
  if (spec.family().is_herm_family()) j["trace"] = spec.trace();
  return j;
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace

OrbitopeSpec load_spec_file(const std::string& path) { return spec_from_json(read_json_file(path)); }

DenseMatrix load_matrix_file(const std::string& path) {
  return matrix_from_json(read_json_file(path));
}

namespace {

std::string chamber_string(const OrbitopeFamily& fam) {
  switch (fam.root_family) {
    case RootFamily::A:
      return "x1 >= ... >= x" + std::to_string(fam.ambient);
    case RootFamily::B:
    case RootFamily::BC:
    case RootFamily::C:
      return "x1 >= ... >= x" + std::to_string(fam.rank) + " >= 0";
    case RootFamily::D:
      return "x1 >= ... >= x" + std::to_string(fam.rank - 1) + " >= |x" +
             std::to_string(fam.rank) + "|";
  }
  return "";
}

json pencil_summary(const LinearPencil& pencil) {
  json blocks = json::array();
  for (const auto& b : pencil.blocks()) {
    json jb;
    jb["size"] = b.size;
    jb["level"] = b.level;
    jb["kind"] = b.kind;
    blocks.push_back(std::move(jb));
  }
  return blocks;
}

}  // namespace

json pencil_metadata(const LinearPencil& pencil) {
  json j;
  j["variables"] = pencil.dimension();
  j["model"] = {{"family", pencil.model().name()},
                {"m", pencil.model().model_rows},
                {"n", pencil.model().model_cols},
                {"field", field_name(pencil.model().field)}};
  j["coordinates"] =
      "row-major free entries; quaternion components in [1,i,j,k] order; unit entries";
  j["blocks"] = pencil_summary(pencil);
  return j;
}

json membership_to_json(const MembershipResult& res) {
  json j;
  j["verdict"] = verdict_name(res.verdict);
  j["worst_slack"] = res.worst_slack;
  j["worst_constraint"] = res.worst_constraint;
  j["tolerance"] = res.tolerance;
  return j;
}

json describe_json(const OrbitopeSpec& spec) {
  const auto& fam = spec.family();
  auto sys = spec.system();
  auto poly = spec.polytope();
  json j;
  j["spec"] = spec_to_json(spec);
  j["root_system"] = {{"family", root_family_name(fam.root_family)},
                      {"rank", fam.rank},
                      {"ambient", fam.ambient},
                      {"chamber", chamber_string(fam)}};
  j["scale"] = fam.scale;
  j["simple_algebra"] = fam.simple_algebra;
  j["beta_values"] = spec.beta_values();
  json zeros = json::array();
  for (int z : poly.beta_zero_indices()) zeros.push_back(z + 1);
  j["beta_treated_as_zero"] = std::move(zeros);
  j["full_dimensional"] = poly.is_full_dimensional();
  if (poly.is_full_dimensional()) {
    json facets = json::array();
    for (int i : poly.facet_indices()) {
      facets.push_back({{"index", i + 1}, {"level", sys.mu(i, spec.x())}});
    }
    j["facets"] = std::move(facets);
    json extremes = json::array();
    for (const auto& eo : extreme_orbits(spec)) {
      json e;
      e["index"] = eo.index + 1;
      e["z"] = eo.z;
      if (eo.z_exact) {
        json zx = json::array();
        for (const auto& v : *eo.z_exact) zx.push_back(v.str());
        e["z_exact"] = std::move(zx);
      }
      extremes.push_back(std::move(e));
    }
    j["polar_extreme_orbits"] = std::move(extremes);
    auto bio = is_biorbitope(spec);
    j["biorbitope"] = {{"verdict", bio.verdict()},
                       {"theorem_condition", bio.theorem_condition},
                       {"single_facet_orbit", bio.single_facet_orbit},
                       {"anomaly", bio.anomaly},
                       {"explanation", bio.explanation}};
    if (bio.verdict()) {
      auto sp = check_self_polarity(spec);
      json js;
      js["proportional"] = sp.proportional;
      if (sp.proportional) {
        js["c"] = sp.c;
        if (sp.c_exact) js["c_exact"] = sp.c_exact->str();
      } else {
        js["z_dominant"] = sp.z_dom;
        js["grid_witnesses"] = sp.witnesses.size();
      }
      js["predicted_c"] = sp.predicted_c;
      j["self_polarity"] = std::move(js);
    }
    auto rat = has_rational_coordinates(spec);
    j["rational_coordinates"] = {{"rational", rat.rational},
                                 {"base", rat.base_description}};
    try {
      auto pencil = orbitope_pencil(spec);
      j["orbitope_pencil"] = pencil_summary(pencil);
    } catch (const Error& e) {
      j["orbitope_pencil"] = std::string("unavailable: ") + e.what();
    }
    try {
      auto pp = polar_pencil(spec);
      j["polar_pencil"] = pencil_summary(pp);
    } catch (const Error& e) {
      j["polar_pencil"] = std::string("unavailable: ") + e.what();
    }
  }
  return j;
}

std::string describe_text(const OrbitopeSpec& spec) {
  json j = describe_json(spec);
  std::ostringstream os;
  os << "family:        " << j["spec"]["family"].get<std::string>() << " ("
     << j["spec"]["m"].get<int>() << "x" << j["spec"]["n"].get<int>() << " over "
     << j["spec"]["field"].get<std::string>() << ")\n";
  os << "root system:   " << j["root_system"]["family"].get<std::string>() << "_"
     << j["root_system"]["rank"].get<int>() << ", chamber "
     << j["root_system"]["chamber"].get<std::string>() << "\n";
  os << "x (dominant):  " << j["spec"]["x"].dump() << "\n";
  os << "beta values:   " << j["beta_values"].dump()
     << "  treated as zero: " << j["beta_treated_as_zero"].dump() << "\n";
  os << "full-dim:      " << (j["full_dimensional"].get<bool>() ? "yes" : "no") << "\n";
  if (!j["full_dimensional"].get<bool>()) return os.str();
  os << "facet indices: " << j["facets"].dump() << "\n";
  os << "polar orbits:  " << j["polar_extreme_orbits"].dump() << "\n";
  os << "biorbitope:    " << (j["biorbitope"]["verdict"].get<bool>() ? "yes" : "no") << " ("
     << j["biorbitope"]["explanation"].get<std::string>() << ")"
     << (j["biorbitope"]["anomaly"].get<bool>() ? " [ANOMALY]" : "") << "\n";
  if (j.contains("self_polarity")) {
    os << "self-polar:    "
       << (j["self_polarity"]["proportional"].get<bool>() ? "proportional" : "not proportional")
       << " (predicted c = " << j["self_polarity"]["predicted_c"].dump() << ")\n";
  }
  os << "rational:      " << (j["rational_coordinates"]["rational"].get<bool>() ? "yes" : "no")
     << " (" << j["rational_coordinates"]["base"].get<std::string>() << ")\n";
  os << "orbitope LMI:  " << j["orbitope_pencil"].dump() << "\n";
  os << "polar LMI:     " << j["polar_pencil"].dump() << "\n";
  return os.str();
}

}  // namespace orbitopes

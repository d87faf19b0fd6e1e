#include "orbitopes/orbitope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace orbitopes {

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::RectReal: return "RectReal";
    case FamilyTag::RectComplex: return "RectComplex";
    case FamilyTag::RectQuat: return "RectQuat";
    case FamilyTag::SquareRealSpecial: return "SquareRealSpecial";
    case FamilyTag::HermReal: return "HermReal";
    case FamilyTag::HermComplex: return "HermComplex";
    case FamilyTag::HermQuat: return "HermQuat";
    case FamilyTag::SkewReal: return "SkewReal";
    case FamilyTag::SkewQuat: return "SkewQuat";
    case FamilyTag::SymComplex: return "SymComplex";
    case FamilyTag::SkewSymComplex: return "SkewSymComplex";
  }
  return "?";
}

FamilyTag family_tag_from_name(const std::string& name) {
  static const std::vector<std::pair<std::string, FamilyTag>> table = {
      {"RectReal", FamilyTag::RectReal},
      {"RectComplex", FamilyTag::RectComplex},
      {"RectQuat", FamilyTag::RectQuat},
      {"SquareRealSpecial", FamilyTag::SquareRealSpecial},
      {"HermReal", FamilyTag::HermReal},
      {"HermComplex", FamilyTag::HermComplex},
      {"HermQuat", FamilyTag::HermQuat},
      {"SkewReal", FamilyTag::SkewReal},
      {"SkewQuat", FamilyTag::SkewQuat},
      {"SymComplex", FamilyTag::SymComplex},
      {"SkewSymComplex", FamilyTag::SkewSymComplex},
  };
  for (const auto& [n, t] : table) {
    if (n == name) return t;
  }
  throw ParseError("unknown orbitope family: " + name);
}

OrbitopeFamily make_family(FamilyTag tag, int m, int n) {
  OrbitopeFamily f;
  f.tag = tag;
  f.m = m;
  f.n = n;
  auto square = [&](int min_n) {
    if (n < min_n) {
      throw ShapeMismatch(family_tag_name(tag) + " requires n >= " + std::to_string(min_n));
    }
    f.m = n;
    f.model_rows = f.model_cols = n;
  };
  switch (tag) {
    case FamilyTag::RectReal:
      if (m == n) {
        throw ShapeMismatch(
            "RectReal with m == n is the exceptional case: use SquareRealSpecial");
      }
      if (m < n || n < 1) throw ShapeMismatch("RectReal requires m > n >= 1");
      f.field = Field::R;
      f.model_rows = m;
      f.model_cols = n;
      f.root_family = RootFamily::B;
      f.rank = n;
      break;
    case FamilyTag::RectComplex:
    case FamilyTag::RectQuat:
      if (m < n || n < 1) {
        throw ShapeMismatch(family_tag_name(tag) +
                            " requires m >= n >= 1 (transpose wider-than-tall input)");
      }
      f.field = tag == FamilyTag::RectComplex ? Field::C : Field::H;
      f.model_rows = m;
      f.model_cols = n;
      f.root_family = m > n ? RootFamily::BC : RootFamily::C;
      f.rank = n;
      break;
    case FamilyTag::SquareRealSpecial:
      square(2);
      f.field = Field::R;
      f.root_family = RootFamily::D;
      f.rank = n;
      break;
    case FamilyTag::HermReal:
    case FamilyTag::HermComplex:
    case FamilyTag::HermQuat:
      square(2);
      f.field = tag == FamilyTag::HermReal ? Field::R
                : tag == FamilyTag::HermComplex ? Field::C
                                                : Field::H;
      f.root_family = RootFamily::A;
      f.rank = n - 1;
      break;
    case FamilyTag::SkewReal:
      square(3);
      f.field = Field::R;
      f.rank = n / 2;
      f.root_family = n % 2 == 1 ? RootFamily::B : RootFamily::D;
      f.scale = 2.0;
      break;
    case FamilyTag::SkewQuat:
      square(1);
      f.field = Field::H;
      f.root_family = RootFamily::C;
      f.rank = n;
      break;
    case FamilyTag::SymComplex:
      square(1);
      f.field = Field::C;
      f.root_family = RootFamily::C;
      f.rank = n;
      break;
    case FamilyTag::SkewSymComplex:
      square(2);
      f.field = Field::C;
      f.root_family = RootFamily::C;
      f.rank = n / 2;
      f.scale = 2.0;
      break;
  }
  f.ambient = f.root_family == RootFamily::A ? f.rank + 1 : f.rank;
  // Simplicity, in the sense that matters here: the restricted root
  // system is irreducible. D_2 = A_1 x A_1 is the only reducible case in
  // the catalog (so(2,2) and so(4)).
  f.simple_algebra = !(f.root_family == RootFamily::D && f.rank == 2);
  return f;
}

void validate_model_element(const OrbitopeFamily& fam, const DenseMatrix& y, double rel_tol) {
  if (y.field() != fam.field || y.rows() != fam.model_rows || y.cols() != fam.model_cols) {
    throw ShapeMismatch("expected a " + std::to_string(fam.model_rows) + "x" +
                        std::to_string(fam.model_cols) + " matrix over " +
                        field_name(fam.field) + " for family " + fam.name());
  }
  auto check = [&](double residual, const char* what) {
    if (residual > rel_tol * std::max(1.0, y.frobenius())) {
      throw SymmetryViolation(std::string(what) + " violated for family " + fam.name());
    }
  };
  switch (fam.tag) {
    case FamilyTag::RectReal:
    case FamilyTag::RectComplex:
    case FamilyTag::RectQuat:
    case FamilyTag::SquareRealSpecial:
      break;
    case FamilyTag::HermReal:
    case FamilyTag::HermComplex:
    case FamilyTag::HermQuat:
      check((y - y.conj_transpose()).frobenius(), "hermitian symmetry");
      break;
    case FamilyTag::SkewReal:
    case FamilyTag::SkewQuat:
      check((y + y.conj_transpose()).frobenius(), "skew-hermitian symmetry");
      break;
    case FamilyTag::SymComplex:
      check((y - y.transpose()).frobenius(), "complex symmetry");
      break;
    case FamilyTag::SkewSymComplex:
      check((y + y.transpose()).frobenius(), "complex antisymmetry");
      break;
  }
}

namespace {

RMat real_part(const DenseMatrix& y) {
  RMat out(y.rows(), y.cols());
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) out.at(i, j) = y.alpha().at(i, j).real();
  return out;
}

// Hermitian matrix -i * y for complex skew-hermitian y; its spectrum is
// the +/- pair spectrum of y rotated onto the real axis.
CMat minus_i_times(const CMat& y) {
  CMat out(y.rows(), y.cols());
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) out.at(i, j) = cxd(0, -1) * y.at(i, j);
  return out;
}

}  // namespace

ACoords a_coordinates(const OrbitopeFamily& fam, const DenseMatrix& y) {
  validate_model_element(fam, y);
  ACoords out;
  switch (fam.tag) {
    case FamilyTag::RectReal:
    case FamilyTag::RectComplex:
    case FamilyTag::RectQuat:
    case FamilyTag::SymComplex:
      out.v = singular_values(y).values;
      break;
    case FamilyTag::SquareRealSpecial: {
      out.v = singular_values(y).values;
      if (det_sign(real_part(y)) < 0) out.v[fam.rank - 1] = -out.v[fam.rank - 1];
      break;
    }
    case FamilyTag::HermReal:
    case FamilyTag::HermComplex:
    case FamilyTag::HermQuat: {
      std::vector<double> eig;
      if (fam.field == Field::H) {
        auto doubled = eig_hermitian(embed_quaternion(y)).values;
        for (int i = 0; i < fam.n; ++i) eig.push_back(doubled[2 * i]);
      } else {
        eig = eig_hermitian_values(y.alpha());
      }
      double tr = 0;
      for (double v : eig) tr += v;
      out.trace = tr;
      out.v = eig;
      for (double& v : out.v) v -= tr / fam.n;
      break;
    }
    case FamilyTag::SkewReal: {
      auto eig = eig_hermitian_values(minus_i_times(complexify(y)));
      out.v.assign(eig.begin(), eig.begin() + fam.rank);
      for (double& v : out.v) v = std::max(v, 0.0);
      if (fam.n % 2 == 0) {
        int pf = pfaffian_sign(real_part(y));
        if (pf < 0) out.v[fam.rank - 1] = -out.v[fam.rank - 1];
      }
      break;
    }
    case FamilyTag::SkewQuat: {
      auto eig = eig_hermitian_values(minus_i_times(embed_quaternion(y).alpha()));
      out.v.assign(eig.begin(), eig.begin() + fam.rank);
      for (double& v : out.v) v = std::max(v, 0.0);
      break;
    }
    case FamilyTag::SkewSymComplex: {
      auto sv = singular_values(y).values;
      for (int i = 0; i < fam.rank; ++i) out.v.push_back(sv[2 * i]);
      break;
    }
  }
  return out;
}

std::vector<double> project_to_a(const OrbitopeFamily& fam, const DenseMatrix& y) {
  validate_model_element(fam, y);
  std::vector<double> out;
  switch (fam.tag) {
    case FamilyTag::RectReal:
    case FamilyTag::RectComplex:
    case FamilyTag::RectQuat:
    case FamilyTag::SquareRealSpecial:
    case FamilyTag::SymComplex:
      for (int i = 0; i < fam.rank; ++i) out.push_back(y.alpha().at(i, i).real());
      break;
    case FamilyTag::HermReal:
    case FamilyTag::HermComplex:
    case FamilyTag::HermQuat:
      for (int i = 0; i < fam.n; ++i) out.push_back(y.alpha().at(i, i).real());
      break;
    case FamilyTag::SkewReal:
    case FamilyTag::SkewSymComplex:
      for (int i = 0; i < fam.rank; ++i) out.push_back(y.alpha().at(2 * i, 2 * i + 1).real());
      break;
    case FamilyTag::SkewQuat:
      for (int i = 0; i < fam.rank; ++i) out.push_back(y.alpha().at(i, i).imag());
      break;
  }
  return out;
}

DenseMatrix embed_a(const OrbitopeFamily& fam, const std::vector<double>& v) {
  int expected = fam.is_herm_family() ? fam.n : fam.rank;
  if (static_cast<int>(v.size()) != expected) {
    throw DimensionError("embed_a expects " + std::to_string(expected) + " coordinates");
  }
  DenseMatrix out = DenseMatrix::zero(fam.field, fam.model_rows, fam.model_cols);
  switch (fam.tag) {
    case FamilyTag::RectReal:
    case FamilyTag::RectComplex:
    case FamilyTag::RectQuat:
    case FamilyTag::SquareRealSpecial:
    case FamilyTag::SymComplex:
      for (int i = 0; i < expected; ++i) out.alpha().at(i, i) = v[i];
      break;
    case FamilyTag::HermReal:
    case FamilyTag::HermComplex:
    case FamilyTag::HermQuat:
      for (int i = 0; i < fam.n; ++i) out.alpha().at(i, i) = v[i];
      break;
    case FamilyTag::SkewReal:
    case FamilyTag::SkewSymComplex:
      for (int i = 0; i < fam.rank; ++i) {
        out.alpha().at(2 * i, 2 * i + 1) = v[i];
        out.alpha().at(2 * i + 1, 2 * i) = -v[i];
      }
      break;
    case FamilyTag::SkewQuat:
      for (int i = 0; i < fam.rank; ++i) out.alpha().at(i, i) = cxd(0, v[i]);
      break;
  }
  return out;
}

OrbitopeSpec OrbitopeSpec::from_a_coords(const OrbitopeFamily& fam, std::vector<double> x) {
  int expected = fam.is_herm_family() ? fam.n : fam.rank;
  if (static_cast<int>(x.size()) != expected) {
    throw DimensionError("family " + fam.name() + " expects " + std::to_string(expected) +
                         " a-coordinates");
  }
  OrbitopeSpec spec;
  spec.fam_ = fam;
  if (fam.is_herm_family()) {
    double tr = 0;
    for (double v : x) tr += v;
    spec.trace_ = tr;
    for (double& v : x) v -= tr / fam.n;
  }
  spec.x_ = fam.system().dominant(x).dominant;
  return spec;
}

OrbitopeSpec OrbitopeSpec::from_a_coords_exact(const OrbitopeFamily& fam,
                                               std::vector<Rational> x) {
  int expected = fam.is_herm_family() ? fam.n : fam.rank;
  if (static_cast<int>(x.size()) != expected) {
    throw DimensionError("family " + fam.name() + " expects " + std::to_string(expected) +
                         " a-coordinates");
  }
  OrbitopeSpec spec;
  spec.fam_ = fam;
  if (fam.is_herm_family()) {
    Rational tr(0);
    for (const auto& v : x) tr += v;
    spec.trace_ = tr.to_double();
    spec.trace_exact_ = tr;
    for (auto& v : x) v -= tr / Rational(fam.n);
  }
  auto dom = fam.system().dominant(x).dominant;
  spec.x_exact_ = dom;
  spec.x_.clear();
  for (const auto& v : dom) spec.x_.push_back(v.to_double());
  return spec;
}

OrbitopeSpec OrbitopeSpec::from_matrix(const OrbitopeFamily& fam, const DenseMatrix& x) {
  auto ac = a_coordinates(fam, x);
  OrbitopeSpec spec;
  spec.fam_ = fam;
  spec.x_ = ac.v;
  spec.trace_ = ac.trace;
  return spec;
}

DenseMatrix base_matrix(const OrbitopeSpec& spec) {
  const auto& fam = spec.family();
  std::vector<double> v = spec.x();
  if (fam.is_herm_family()) {
    for (double& c : v) c += spec.trace() / fam.n;
  }
  return embed_a(fam, v);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "Inside";
    case Verdict::Boundary: return "Boundary";
    case Verdict::Outside: return "Outside";
  }
  return "?";
}

MembershipResult membership(const OrbitopeSpec& spec, const DenseMatrix& y, double eps) {
  const auto& fam = spec.family();
  ACoords ay = a_coordinates(fam, y);
  auto sys = spec.system();
  MembershipResult res;
  res.worst_slack = -std::numeric_limits<double>::infinity();
  double level_scale = 1.0;
  for (int j = 0; j < fam.rank; ++j) {
    double lvl = sys.mu(j, spec.x());
    level_scale = std::max(level_scale, std::abs(lvl));
    double slack = sys.mu(j, ay.v) - lvl;
    if (slack > res.worst_slack) {
      res.worst_slack = slack;
      res.worst_constraint = "mu_" + std::to_string(j + 1);
    }
  }
  if (fam.is_herm_family()) level_scale = std::max(level_scale, std::abs(spec.trace()));
  res.tolerance = eps * level_scale;
  // Herm*: the trace equality gates membership but does not define a
  // boundary band; interior points of the trace slice stay Inside.
  if (fam.is_herm_family() && std::abs(ay.trace - spec.trace()) > res.tolerance) {
    res.verdict = Verdict::Outside;
    res.worst_slack = std::abs(ay.trace - spec.trace());
    res.worst_constraint = "trace";
    return res;
  }
  if (res.worst_slack > res.tolerance) {
    res.verdict = Verdict::Outside;
  } else if (res.worst_slack >= -res.tolerance) {
    res.verdict = Verdict::Boundary;
  } else {
    res.verdict = Verdict::Inside;
  }
  return res;
}

double support_function(const OrbitopeSpec& spec, const DenseMatrix& d) {
  const auto& fam = spec.family();
  ACoords ad = a_coordinates(fam, d);
  double h = 0;
  for (std::size_t i = 0; i < ad.v.size(); ++i) h += spec.x()[i] * ad.v[i];
  h *= fam.scale;
  if (fam.is_herm_family()) h += spec.trace() * ad.trace / fam.n;
  return h;
}

namespace {

struct QuatScalar {
  cxd a, b;
};

QuatScalar quat_conj(const QuatScalar& q) { return {std::conj(q.a), -q.b}; }

QuatScalar quat_mul(const QuatScalar& p, const QuatScalar& q) {
  return {p.a * q.a - std::conj(p.b) * q.b, std::conj(p.a) * q.b + p.b * q.a};
}

QuatScalar entry(const DenseMatrix& m, int r, int c) {
  return {m.alpha().at(r, c), m.field() == Field::H ? m.beta().at(r, c) : cxd(0)};
}

void set_entry_q(DenseMatrix& m, int r, int c, const QuatScalar& q) {
  m.alpha().at(r, c) = q.a;
  if (m.field() == Field::H) m.beta().at(r, c) = q.b;
}

// Modified Gram-Schmidt on the columns of a Gaussian matrix, with
// quaternion-aware inner products (coefficients applied on the right).
// The R factor has positive real diagonal, so the Q factor is
// Haar-distributed on the unitary group of the field.
DenseMatrix gram_schmidt_unitary(Field f, int n, Rng& rng) {
  DenseMatrix g = DenseMatrix::zero(f, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double comp[4] = {rng.gaussian(), 0, 0, 0};
      if (f != Field::R) comp[1] = rng.gaussian();
      if (f == Field::H) {
        comp[2] = rng.gaussian();
        comp[3] = rng.gaussian();
      }
      g.set_entry(i, j, comp);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      // coeff = <q_i, col_j> (quaternion-valued for H)
      QuatScalar coeff{cxd(0), cxd(0)};
      for (int r = 0; r < n; ++r) {
        coeff.a += quat_mul(quat_conj(entry(g, r, i)), entry(g, r, j)).a;
        if (f == Field::H) {
          coeff.b += quat_mul(quat_conj(entry(g, r, i)), entry(g, r, j)).b;
        }
      }
      for (int r = 0; r < n; ++r) {
        QuatScalar v = entry(g, r, j);
        QuatScalar sub = quat_mul(entry(g, r, i), coeff);
        set_entry_q(g, r, j, {v.a - sub.a, v.b - sub.b});
      }
    }
    double norm = 0;
    for (int r = 0; r < n; ++r) {
      QuatScalar v = entry(g, r, j);
      norm += std::norm(v.a) + std::norm(v.b);
    }
    norm = std::sqrt(norm);
    for (int r = 0; r < n; ++r) {
      QuatScalar v = entry(g, r, j);
      set_entry_q(g, r, j, {v.a / norm, v.b / norm});
    }
  }
  return g;
}

}  // namespace

DenseMatrix haar_orthogonal(int n, Rng& rng) {
  DenseMatrix q = gram_schmidt_unitary(Field::R, n, rng);
  if (det_sign(real_part(q)) < 0) {
    for (int r = 0; r < n; ++r) q.alpha().at(r, n - 1) = -q.alpha().at(r, n - 1);
  }
  return q;
}

DenseMatrix haar_unitary(int n, Rng& rng) { return gram_schmidt_unitary(Field::C, n, rng); }

DenseMatrix haar_symplectic(int n, Rng& rng) { return gram_schmidt_unitary(Field::H, n, rng); }

std::vector<DenseMatrix> orbit_sample(const OrbitopeSpec& spec, int count, std::uint64_t seed) {
  const auto& fam = spec.family();
  Rng rng(seed);
  DenseMatrix base = base_matrix(spec);
  std::vector<DenseMatrix> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    switch (fam.tag) {
      case FamilyTag::RectReal:
      case FamilyTag::SquareRealSpecial: {
        auto u = haar_orthogonal(fam.model_rows, rng);
        auto v = haar_orthogonal(fam.model_cols, rng);
        out.push_back(u * base * v.conj_transpose());
        break;
      }
      case FamilyTag::RectComplex: {
        auto u = haar_unitary(fam.model_rows, rng);
        auto v = haar_unitary(fam.model_cols, rng);
        out.push_back(u * base * v.conj_transpose());
        break;
      }
      case FamilyTag::RectQuat: {
        auto u = haar_symplectic(fam.model_rows, rng);
        auto v = haar_symplectic(fam.model_cols, rng);
        out.push_back(u * base * v.conj_transpose());
        break;
      }
      case FamilyTag::HermReal:
      case FamilyTag::SkewReal: {
        auto g = haar_orthogonal(fam.n, rng);
        out.push_back(g * base * g.conj_transpose());
        break;
      }
      case FamilyTag::HermComplex: {
        auto g = haar_unitary(fam.n, rng);
        out.push_back(g * base * g.conj_transpose());
        break;
      }
      case FamilyTag::HermQuat:
      case FamilyTag::SkewQuat: {
        auto g = haar_symplectic(fam.n, rng);
        out.push_back(g * base * g.conj_transpose());
        break;
      }
      case FamilyTag::SymComplex:
      case FamilyTag::SkewSymComplex: {
        auto g = haar_unitary(fam.n, rng);
        out.push_back(g * base * g.transpose());
        break;
      }
    }
  }
  return out;
}

namespace {

// Free slots of the model space: primary position, component index and
// how the mirrored position is filled.
enum class Mirror { None, HermConj, SkewHermConj, SymCopy, SkewCopy };

struct Slot {
  int r, c, comp;
  Mirror mirror;
};

std::vector<Slot> model_slots(const OrbitopeFamily& fam) {
  std::vector<Slot> slots;
  int comps = fam.field == Field::R ? 1 : (fam.field == Field::C ? 2 : 4);
  auto push_full = [&]() {
    for (int i = 0; i < fam.model_rows; ++i)
      for (int j = 0; j < fam.model_cols; ++j)
        for (int k = 0; k < comps; ++k) slots.push_back({i, j, k, Mirror::None});
  };
  switch (fam.tag) {
    case FamilyTag::RectReal:
    case FamilyTag::RectComplex:
    case FamilyTag::RectQuat:
    case FamilyTag::SquareRealSpecial:
      push_full();
      break;
    case FamilyTag::HermReal:
    case FamilyTag::HermComplex:
    case FamilyTag::HermQuat:
      for (int i = 0; i < fam.n; ++i) {
        slots.push_back({i, i, 0, Mirror::None});
        for (int j = i + 1; j < fam.n; ++j)
          for (int k = 0; k < comps; ++k) slots.push_back({i, j, k, Mirror::HermConj});
      }
      break;
    case FamilyTag::SkewReal:
      for (int i = 0; i < fam.n; ++i)
        for (int j = i + 1; j < fam.n; ++j) slots.push_back({i, j, 0, Mirror::SkewHermConj});
      break;
    case FamilyTag::SkewQuat:
      for (int i = 0; i < fam.n; ++i) {
        for (int k = 1; k < 4; ++k) slots.push_back({i, i, k, Mirror::None});
        for (int j = i + 1; j < fam.n; ++j)
          for (int k = 0; k < 4; ++k) slots.push_back({i, j, k, Mirror::SkewHermConj});
      }
      break;
    case FamilyTag::SymComplex:
      for (int i = 0; i < fam.n; ++i) {
        for (int k = 0; k < 2; ++k) slots.push_back({i, i, k, Mirror::None});
        for (int j = i + 1; j < fam.n; ++j)
          for (int k = 0; k < 2; ++k) slots.push_back({i, j, k, Mirror::SymCopy});
      }
      break;
    case FamilyTag::SkewSymComplex:
      for (int i = 0; i < fam.n; ++i)
        for (int j = i + 1; j < fam.n; ++j)
          for (int k = 0; k < 2; ++k) slots.push_back({i, j, k, Mirror::SkewCopy});
      break;
  }
  return slots;
}

}  // namespace

int model_dimension(const OrbitopeFamily& fam) {
  return static_cast<int>(model_slots(fam).size());
}

DenseMatrix model_from_coordinates(const OrbitopeFamily& fam,
                                   const std::vector<double>& coords) {
  auto slots = model_slots(fam);
  if (coords.size() != slots.size()) {
    throw DimensionError("model space of " + fam.name() + " has dimension " +
                         std::to_string(slots.size()));
  }
  DenseMatrix out = DenseMatrix::zero(fam.field, fam.model_rows, fam.model_cols);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const Slot& slot = slots[s];
    double comp[4];
    out.entry_components(slot.r, slot.c, comp);
    comp[slot.comp] += coords[s];
    out.set_entry(slot.r, slot.c, comp);
    if (slot.mirror == Mirror::None || slot.r == slot.c) continue;
    double mirrored[4];
    out.entry_components(slot.c, slot.r, mirrored);
    switch (slot.mirror) {
      case Mirror::HermConj:
        mirrored[slot.comp] += slot.comp == 0 ? coords[s] : -coords[s];
        break;
      case Mirror::SkewHermConj:
        mirrored[slot.comp] += slot.comp == 0 ? -coords[s] : coords[s];
        break;
      case Mirror::SymCopy:
        mirrored[slot.comp] += coords[s];
        break;
      case Mirror::SkewCopy:
        mirrored[slot.comp] += -coords[s];
        break;
      case Mirror::None:
        break;
    }
    out.set_entry(slot.c, slot.r, mirrored);
  }
  return out;
}

std::vector<double> model_coordinates(const OrbitopeFamily& fam, const DenseMatrix& y) {
  validate_model_element(fam, y);
  auto slots = model_slots(fam);
  std::vector<double> out(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    double comp[4];
    y.entry_components(slots[s].r, slots[s].c, comp);
    out[s] = comp[slots[s].comp];
  }
  return out;
}

DenseMatrix model_basis_element(const OrbitopeFamily& fam, int index) {
  int dim = model_dimension(fam);
  if (index < 0 || index >= dim) throw DimensionError("model basis index out of range");
  std::vector<double> coords(dim, 0.0);
  coords[index] = 1.0;
  return model_from_coordinates(fam, coords);
}

DenseMatrix random_model_element(const OrbitopeFamily& fam, Rng& rng) {
  std::vector<double> coords(model_dimension(fam));
  for (double& c : coords) c = rng.gaussian();
  return model_from_coordinates(fam, coords);
}

}  // namespace orbitopes

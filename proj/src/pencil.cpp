#include "orbitopes/pencil.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "orbitopes/spin.hpp"

namespace orbitopes {

CMat PencilBlock::evaluate(const DenseMatrix& y) const {
  CMat r = rep(y);
  for (int i = 0; i < r.rows(); ++i) r.at(i, i) = level - r.at(i, i);
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) {
      if (i != j) r.at(i, j) = -r.at(i, j);
    }
  }
  return r;
}

double PencilBlock::min_slack_eigenvalue(const DenseMatrix& y) const {
  auto vals = eig_hermitian_values(evaluate(y));
  return vals.back();
}

LinearPencil::Feasibility LinearPencil::feasibility(const DenseMatrix& y) const {
  Feasibility f;
  f.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    double mn = blocks_[b].min_slack_eigenvalue(y);
    if (mn < f.min_eigenvalue) {
      f.min_eigenvalue = mn;
      f.worst_block = static_cast<int>(b);
      f.worst_kind = blocks_[b].kind;
    }
  }
  return f;
}

bool LinearPencil::feasible(const DenseMatrix& y, double eps) const {
  return feasibility(y).min_eigenvalue >= -eps;
}

void LinearPencil::materialize() {
  if (materialized_) return;
  const int d = dimension();
  DenseMatrix zero = DenseMatrix::zero(model_.field, model_.model_rows, model_.model_cols);
  for (auto& block : blocks_) {
    block.coeffs.clear();
    block.coeffs.reserve(d + 1);
    CMat a0 = block.evaluate(zero);
    block.coeffs.push_back(a0);
    for (int i = 0; i < d; ++i) {
      CMat ai = cxd(-1, 0) * block.rep(model_basis_element(model_, i));
      block.coeffs.push_back(std::move(ai));
    }
  }
  materialized_ = true;
}

CMat realify_hermitian(const CMat& h) {
  const int n = h.rows();
  CMat out(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double p = h.at(i, j).real();
      double q = h.at(i, j).imag();
      out.at(i, j) = p;
      out.at(n + i, n + j) = p;
      out.at(i, n + j) = -q;
      out.at(n + i, j) = q;
    }
  }
  return out;
}

LinearPencil LinearPencil::realify() const {
  std::vector<PencilBlock> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& src : blocks_) {
    PencilBlock b;
    b.size = 2 * src.size;
    b.kind = src.kind;
    b.level = src.level;
    b.real_symmetric = true;
    auto inner = src.rep;
    b.rep = [inner](const DenseMatrix& y) { return realify_hermitian(inner(y)); };
    if (!src.coeffs.empty()) {
      for (std::size_t i = 0; i < src.coeffs.size(); ++i) {
        // slack coefficients realify the same way the evaluator does
        b.coeffs.push_back(realify_hermitian(src.coeffs[i]));
      }
    }
    blocks.push_back(std::move(b));
  }
  LinearPencil out(model_, std::move(blocks));
  out.materialized_ = materialized_;
  out.realified_ = true;
  return out;
}

std::string LinearPencil::sdpa_string() const {
  if (!materialized_) {
    throw NotMaterialized("SDPA export requires a materialized pencil");
  }
  if (!realified_) {
    // Natively real blocks export as-is; anything complex must be
    // realified first.
    for (const auto& block : blocks_) {
      for (const auto& coeff : block.coeffs) {
        for (int r = 0; r < coeff.rows(); ++r) {
          for (int c = 0; c < coeff.cols(); ++c) {
            if (coeff.at(r, c).imag() != 0.0) {
              throw NotMaterialized(
                  "SDPA export of a complex pencil requires realify() first");
            }
          }
        }
      }
    }
  }
  const int d = dimension();
  if (d < 1) throw NotMaterialized("SDPA export requires at least one variable");
  std::ostringstream os;
  os << d << "\n";
  os << blocks_.size() << "\n";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    os << blocks_[b].size << (b + 1 == blocks_.size() ? "\n" : " ");
  }
  for (int i = 0; i < d; ++i) os << "0" << (i + 1 == d ? "\n" : " ");
  char buf[64];
  auto emit = [&](int mat, int blk, int r, int c, double v) {
    if (v == 0.0) return;
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << mat << " " << blk << " " << r + 1 << " " << c + 1 << " " << buf << "\n";
  };
  // F_0 = -A_0, F_i = A_i; feasibility of sum y_i F_i - F_0 >= 0 then
  // matches A_0 + sum y_i A_i >= 0.
  for (int mat = 0; mat <= d; ++mat) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const CMat& coeff = blocks_[b].coeffs[mat];
      for (int r = 0; r < coeff.rows(); ++r) {
        for (int c = r; c < coeff.cols(); ++c) {
          double v = coeff.at(r, c).real();
          emit(mat, static_cast<int>(b) + 1, r, c, mat == 0 ? -v : v);
        }
      }
    }
  }
  return os.str();
}

void LinearPencil::export_sdpa(const std::string& path) const {
  std::string text = sdpa_string();
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out.good()) throw Error("failed writing " + path);
}

SdpaData parse_sdpa(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto next_data_line = [&]() {
    while (std::getline(is, line)) {
      if (line.empty() || line[0] == '"' || line[0] == '*') continue;
      return true;
    }
    return false;
  };
  SdpaData data;
  if (!next_data_line()) throw ParseError("SDPA: missing variable count");
  data.variables = std::stoi(line);
  if (!next_data_line()) throw ParseError("SDPA: missing block count");
  int nblocks = std::stoi(line);
  if (!next_data_line()) throw ParseError("SDPA: missing block sizes");
  {
    std::istringstream ls(line);
    int s;
    while (ls >> s) data.block_sizes.push_back(std::abs(s));
    if (static_cast<int>(data.block_sizes.size()) != nblocks) {
      throw ParseError("SDPA: block size list does not match block count");
    }
  }
  if (!next_data_line()) throw ParseError("SDPA: missing objective row");
  data.f.assign(data.variables + 1, {});
  for (auto& fi : data.f) {
    for (int b = 0; b < nblocks; ++b) fi.emplace_back(data.block_sizes[b], data.block_sizes[b]);
  }
  while (next_data_line()) {
    std::istringstream ls(line);
    int mat, blk, r, c;
    double v;
    if (!(ls >> mat >> blk >> r >> c >> v)) continue;
    auto& m = data.f[mat][blk - 1];
    m.at(r - 1, c - 1) = v;
    m.at(c - 1, r - 1) = v;
  }
  return data;
}

namespace {

CMat minus_i(const CMat& y) {
  CMat out(y.rows(), y.cols());
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) out.at(i, j) = cxd(0, -1) * y.at(i, j);
  return out;
}

long long checked_binomial(int n, int k, long long cap, const std::string& what) {
  long long dim = binomial_capped(n, k, cap);
  if (dim > cap) {
    throw SizeCapExceeded(what + ": C(" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds cap " + std::to_string(cap));
  }
  return dim;
}

PencilBlock exterior_block(int carrier_dim, int k_ext, long long cap,
                           std::function<CMat(const DenseMatrix&)> carrier) {
  PencilBlock b;
  b.size = static_cast<int>(checked_binomial(carrier_dim, k_ext, cap, "exterior block"));
  b.kind = "exterior_" + std::to_string(k_ext);
  b.rep = [carrier = std::move(carrier), k_ext, cap](const DenseMatrix& y) {
    return exterior_power_additive(carrier(y), k_ext, cap);
  };
  return b;
}

}  // namespace

FundamentalBlock fundamental_block(const OrbitopeFamily& fam, int j, bool centered,
                                   long long size_cap) {
  if (j < 0 || j >= fam.rank) throw DimensionError("fundamental index out of range");
  FundamentalBlock fb;
  const int k = j + 1;
  const bool last = (j == fam.rank - 1);
  switch (fam.tag) {
    case FamilyTag::RectReal:
    case FamilyTag::RectComplex: {
      fb.block = exterior_block(fam.m + fam.n, k, size_cap, [](const DenseMatrix& y) {
        return hermitian_dilation_c(complexify(y));
      });
      fb.mu_multiplier = (fam.root_family == RootFamily::C && last) ? 2.0 : 1.0;
      break;
    }
    case FamilyTag::RectQuat: {
      fb.block = exterior_block(2 * (fam.m + fam.n), 2 * k, size_cap, [](const DenseMatrix& y) {
        return hermitian_dilation_c(embed_quaternion(y).alpha());
      });
      fb.mu_multiplier = (fam.root_family == RootFamily::C && last) ? 4.0 : 2.0;
      break;
    }
    case FamilyTag::SquareRealSpecial: {
      if (j <= fam.rank - 3) {
        fb.block = exterior_block(2 * fam.n, k, size_cap, [](const DenseMatrix& y) {
          return hermitian_dilation_c(complexify(y));
        });
      } else {
        int sign = last ? +1 : -1;
        auto basis = clifford_basis(2 * fam.n, std::max<long long>(2048, 2 * size_cap));
        if (basis->spinor_dim() / 2 > size_cap) {
          throw SizeCapExceeded("half-spin block dimension 2^" + std::to_string(fam.n - 1) +
                                " exceeds cap");
        }
        PencilBlock b;
        b.size = basis->spinor_dim() / 2;
        b.kind = sign > 0 ? "half_spin_plus" : "half_spin_minus";
        b.rep = [basis, sign](const DenseMatrix& y) {
          return basis->half_spin_split(hermitian_dilation_c(complexify(y)), sign);
        };
        fb.block = std::move(b);
      }
      fb.mu_multiplier = 1.0;
      break;
    }
    case FamilyTag::HermReal:
    case FamilyTag::HermComplex: {
      int n = fam.n;
      fb.block = exterior_block(n, k, size_cap, [centered, n](const DenseMatrix& y) {
        CMat h = complexify(y);
        if (centered) {
          cxd tr = 0;
          for (int i = 0; i < n; ++i) tr += h.at(i, i);
          for (int i = 0; i < n; ++i) h.at(i, i) -= tr / static_cast<double>(n);
        }
        return h;
      });
      fb.mu_multiplier = 1.0;
      fb.trace_coeff = centered ? 0.0 : static_cast<double>(k) / fam.n;
      break;
    }
    case FamilyTag::HermQuat: {
      int n = fam.n;
      fb.block = exterior_block(2 * n, 2 * k, size_cap, [centered, n](const DenseMatrix& y) {
        CMat h = embed_quaternion(y).alpha();
        if (centered) {
          cxd tr = 0;
          for (int i = 0; i < 2 * n; ++i) tr += h.at(i, i);
          for (int i = 0; i < 2 * n; ++i) h.at(i, i) -= tr / static_cast<double>(2 * n);
        }
        return h;
      });
      fb.mu_multiplier = 2.0;
      fb.trace_coeff = centered ? 0.0 : 2.0 * k / fam.n;
      break;
    }
    case FamilyTag::SkewReal: {
      bool even = fam.n % 2 == 0;
      if (!even || j <= fam.rank - 3) {
        fb.block = exterior_block(fam.n, k, size_cap, [](const DenseMatrix& y) {
          return minus_i(complexify(y));
        });
      } else {
        int sign = last ? +1 : -1;
        auto basis = clifford_basis(fam.n, std::max<long long>(2048, 2 * size_cap));
        if (basis->spinor_dim() / 2 > size_cap) {
          throw SizeCapExceeded("half-spin block dimension exceeds cap");
        }
        PencilBlock b;
        b.size = basis->spinor_dim() / 2;
        b.kind = sign > 0 ? "half_spin_plus" : "half_spin_minus";
        b.rep = [basis, sign](const DenseMatrix& y) {
          return basis->half_spin_standard(minus_i(complexify(y)), sign);
        };
        fb.block = std::move(b);
      }
      fb.mu_multiplier = 1.0;
      break;
    }
    case FamilyTag::SkewQuat: {
      fb.block = exterior_block(2 * fam.n, k, size_cap, [](const DenseMatrix& y) {
        return minus_i(embed_quaternion(y).alpha());
      });
      fb.mu_multiplier = last ? 2.0 : 1.0;
      break;
    }
    case FamilyTag::SymComplex: {
      fb.block = exterior_block(2 * fam.n, k, size_cap, [](const DenseMatrix& y) {
        return hermitian_dilation_c(complexify(y));
      });
      fb.mu_multiplier = last ? 2.0 : 1.0;
      break;
    }
    case FamilyTag::SkewSymComplex: {
      fb.block = exterior_block(2 * fam.n, 2 * k, size_cap, [](const DenseMatrix& y) {
        return hermitian_dilation_c(complexify(y));
      });
      fb.mu_multiplier = last ? 4.0 : 2.0;
      break;
    }
  }
  return fb;
}

LinearPencil ky_fan_ball_pencil(Field field, int m, int n, int k, double radius,
                                long long size_cap) {
  if (n > m || n < 1) throw ShapeMismatch("Ky Fan ball needs m >= n >= 1");
  if (k < 1 || k > n) throw ShapeMismatch("Ky Fan index must lie in [1, n]");
  FamilyTag tag;
  switch (field) {
    case Field::R:
      tag = (m == n) ? FamilyTag::SquareRealSpecial : FamilyTag::RectReal;
      break;
    case Field::C:
      tag = FamilyTag::RectComplex;
      break;
    case Field::H:
      tag = FamilyTag::RectQuat;
      break;
    default:
      throw ShapeMismatch("bad field");
  }
  auto fam = make_family(tag, m, n);
  PencilBlock block;
  if (field == Field::H) {
    block = exterior_block(2 * (m + n), 2 * k, size_cap, [](const DenseMatrix& y) {
      return hermitian_dilation_c(embed_quaternion(y).alpha());
    });
    block.level = 2.0 * radius;
  } else {
    block = exterior_block(m + n, k, size_cap, [](const DenseMatrix& y) {
      return hermitian_dilation_c(complexify(y));
    });
    block.level = radius;
  }
  std::vector<PencilBlock> blocks;
  blocks.push_back(std::move(block));
  return LinearPencil(fam, std::move(blocks));
}

LinearPencil orbitope_pencil(const OrbitopeSpec& spec, long long size_cap) {
  const auto& fam = spec.family();
  auto sys = spec.system();
  auto facets = spec.polytope().facet_indices();
  std::vector<PencilBlock> blocks;
  for (int j : facets) {
    FundamentalBlock fb = fundamental_block(fam, j, /*centered=*/false, size_cap);
    fb.block.level = fb.mu_multiplier * sys.mu(j, spec.x()) + fb.trace_coeff * spec.trace();
    blocks.push_back(std::move(fb.block));
  }
  if (fam.is_herm_family()) {
    // Trace equality as a pair of opposite 1x1 inequalities.
    double target = spec.trace();
    PencilBlock plus;
    plus.size = 1;
    plus.kind = "trace_plus";
    plus.level = target;
    plus.rep = [](const DenseMatrix& y) {
      CMat m(1, 1);
      m.at(0, 0) = y.re_trace();
      return m;
    };
    PencilBlock minus;
    minus.size = 1;
    minus.kind = "trace_minus";
    minus.level = -target;
    minus.rep = [](const DenseMatrix& y) {
      CMat m(1, 1);
      m.at(0, 0) = -y.re_trace();
      return m;
    };
    blocks.push_back(std::move(plus));
    blocks.push_back(std::move(minus));
  }
  return LinearPencil(fam, std::move(blocks));
}

}  // namespace orbitopes

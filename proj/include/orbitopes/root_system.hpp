#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbitopes/errors.hpp"
#include "orbitopes/rational.hpp"

namespace orbitopes {

/// Classical restricted-root families. BC shares B's simple roots and
/// chamber; it only records that the doubled root 2e_n is present.
enum class RootFamily { A, B, C, BC, D };

std::string root_family_name(RootFamily f);

namespace detail {

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static double from_rational(const Rational& r) { return r.to_double(); }
  static double zero() { return 0.0; }
  static bool leq(double a, double b, double tol) { return a <= b + tol; }
  static bool is_zero(double a, double tol) { return std::abs(a) <= tol; }
  static double abs(double a) { return std::abs(a); }
  // -0.0 and +0.0 must not count as distinct orbit points.
  static double canon(double a) { return a == 0.0 ? 0.0 : a; }
  static constexpr double chamber_tol = 1e-10;
};

template <>
struct ScalarTraits<Rational> {
  static Rational from_rational(const Rational& r) { return r; }
  static Rational zero() { return Rational(0); }
  static bool leq(const Rational& a, const Rational& b, double) { return a <= b; }
  static bool is_zero(const Rational& a, double) { return a.is_zero(); }
  static Rational abs(const Rational& a) { return a.abs(); }
  static Rational canon(const Rational& a) { return a; }
  static constexpr double chamber_tol = 0.0;
};

}  // namespace detail

/// Sparse linear functional on the ambient coordinate space.
struct LinearForm {
  std::vector<std::pair<int, Rational>> terms;

  template <typename S>
  S value(const std::vector<S>& v) const {
    S acc = detail::ScalarTraits<S>::zero();
    for (const auto& [idx, coeff] : terms) {
      acc = acc + detail::ScalarTraits<S>::from_rational(coeff) * v[idx];
    }
    return acc;
  }
};

/// Signed permutation w acting by (w.v)[i] = sign[i] * v[source[i]].
struct SignedPerm {
  std::vector<int> source;
  std::vector<int> sign;

  template <typename S>
  std::vector<S> apply(const std::vector<S>& v) const {
    std::vector<S> out(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
      S s = v[source[i]];
      if (sign[i] < 0) s = -s;
      out[i] = detail::ScalarTraits<S>::canon(s);
    }
    return out;
  }

  SignedPerm inverse() const {
    SignedPerm inv;
    inv.source.resize(source.size());
    inv.sign.resize(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
      inv.source[source[i]] = static_cast<int>(i);
      inv.sign[source[i]] = sign[i];
    }
    return inv;
  }

  static SignedPerm identity(int n) {
    SignedPerm w;
    w.source.resize(n);
    w.sign.assign(n, 1);
    for (int i = 0; i < n; ++i) w.source[i] = i;
    return w;
  }
};

/// A vector together with its unique chamber representative and a Weyl
/// element mapping the original coordinates onto it.
template <typename S>
struct ChamberVector {
  std::vector<S> coords;
  std::vector<S> dominant;
  SignedPerm witness;
};

/// Restricted root system of classical type with exact simple roots and
/// dual coweights. A-type of rank n lives in n+1 coordinates with a
/// zero-sum constraint; all other families use n coordinates.
///
/// Values are immutable after construction and all member functions are
/// pure, so instances may be shared freely across threads.
class RestrictedRootSystem {
 public:
  static RestrictedRootSystem make(RootFamily family, int rank);

  RootFamily family() const { return family_; }
  int rank() const { return rank_; }
  int ambient() const { return ambient_; }

  /// j is 0-based; functional beta_{j+1} of the spec's 1-based labels.
  const LinearForm& simple_root(int j) const { return simple_roots_[j]; }
  /// Exact dual coweight h_{mu_{j+1}} with beta_i(h_{mu_j}) = delta_ij.
  const std::vector<Rational>& coweight(int j) const { return coweights_[j]; }

  /// mu_j(v) = <h_{mu_j}, v> in the ambient dot product.
  template <typename S>
  S mu(int j, const std::vector<S>& v) const {
    check_dim(static_cast<int>(v.size()));
    S acc = detail::ScalarTraits<S>::zero();
    for (int i = 0; i < ambient_; ++i) {
      acc = acc + detail::ScalarTraits<S>::from_rational(coweights_[j][i]) * v[i];
    }
    return acc;
  }

  template <typename S>
  std::vector<S> simple_root_values(const std::vector<S>& v) const {
    check_dim(static_cast<int>(v.size()));
    std::vector<S> out(rank_);
    for (int j = 0; j < rank_; ++j) out[j] = simple_roots_[j].value(v);
    return out;
  }

  /// True when all mu_j(v) >= -tol, i.e. v lies in the dual cone T.
  template <typename S>
  bool in_dual_cone(const std::vector<S>& v, double tol = 1e-9) const {
    for (int j = 0; j < rank_; ++j) {
      S m = mu(j, v);
      if (!detail::ScalarTraits<S>::leq(detail::ScalarTraits<S>::zero(), m, tol)) return false;
    }
    return true;
  }

  /// Chamber reduction. A: sort descending. B/C/BC: sort absolute values
  /// descending, all signs cleared. D: as B except that the last
  /// coordinate carries the product of the original signs; when some
  /// coordinate vanishes the nonnegative representative is chosen.
  template <typename S>
  ChamberVector<S> dominant(const std::vector<S>& v) const {
    check_dim(static_cast<int>(v.size()));
    check_zero_sum(v);
    using T = detail::ScalarTraits<S>;

    ChamberVector<S> out;
    out.coords = v;
    const int d = ambient_;
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i;

    if (family_ == RootFamily::A) {
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return v[b] < v[a]; });
      out.witness.source = order;
      out.witness.sign.assign(d, 1);
    } else {
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return T::abs(v[b]) < T::abs(v[a]);
      });
      out.witness.source = order;
      out.witness.sign.resize(d);
      int flips = 0;
      int zero_pos = -1;
      for (int i = 0; i < d; ++i) {
        S val = v[order[i]];
        bool neg = val < T::zero();
        out.witness.sign[i] = neg ? -1 : 1;
        if (neg) ++flips;
        if (T::is_zero(val, 0.0) && zero_pos < 0) zero_pos = i;
      }
      if (family_ == RootFamily::D && (flips % 2) != 0) {
        // Parity of sign changes is a D-type invariant; spend the odd
        // flip on a vanishing coordinate when one exists.
        out.witness.sign[zero_pos >= 0 ? zero_pos : d - 1] *= -1;
      }
    }
    out.dominant = out.witness.apply(v);
    return out;
  }

  /// Full Weyl orbit of v, enumerated by closing under the simple
  /// reflections. Deduplication is exact: reflections only permute and
  /// negate coordinates.
  template <typename S>
  std::vector<std::vector<S>> weyl_orbit(const std::vector<S>& v,
                                         std::size_t cap = 1000000) const {
    check_dim(static_cast<int>(v.size()));
    check_zero_sum(v);
    using T = detail::ScalarTraits<S>;
    std::set<std::vector<S>> seen;
    std::vector<std::vector<S>> queue;
    std::vector<S> start(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) start[i] = T::canon(v[i]);
    seen.insert(start);
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::vector<S> cur = queue[head];
      for (int j = 0; j < rank_; ++j) {
        std::vector<S> next = reflect_simple(cur, j);
        if (seen.insert(next).second) {
          if (seen.size() > cap) {
            throw OrbitTooLarge("Weyl orbit exceeds cap of " + std::to_string(cap));
          }
          queue.push_back(next);
        }
      }
    }
    return std::vector<std::vector<S>>(seen.begin(), seen.end());
  }

  /// Applies the simple reflection s_{beta_{j+1}} (a coordinate swap,
  /// sign flip, or swap-and-flip depending on the family).
  template <typename S>
  std::vector<S> reflect_simple(const std::vector<S>& v, int j) const {
    using T = detail::ScalarTraits<S>;
    std::vector<S> out = v;
    switch (family_) {
      case RootFamily::A:
        std::swap(out[j], out[j + 1]);
        break;
      case RootFamily::B:
      case RootFamily::BC:
      case RootFamily::C:
        if (j + 1 < rank_) {
          std::swap(out[j], out[j + 1]);
        } else {
          out[j] = T::canon(-out[j]);
        }
        break;
      case RootFamily::D:
        if (j + 1 < rank_) {
          std::swap(out[j], out[j + 1]);
        } else {
          S a = out[rank_ - 2];
          S b = out[rank_ - 1];
          out[rank_ - 2] = T::canon(-b);
          out[rank_ - 1] = T::canon(-a);
        }
        break;
    }
    return out;
  }

  /// Order of the Weyl group: (n+1)! for A_n, 2^n n! for B/C/BC, 2^{n-1} n! for D.
  /// Throws OverflowError when it does not fit in 64 bits.
  std::uint64_t group_order() const;

  /// Edges of the Dynkin graph on 0-based node indices.
  std::vector<std::pair<int, int>> dynkin_edges() const;

  /// Connected components of the subgraph induced by `nodes` (0-based).
  std::vector<std::vector<int>> dynkin_components(const std::vector<int>& nodes) const;

 private:
  void check_dim(int d) const {
    if (d != ambient_) {
      throw DimensionError("expected vector of dimension " + std::to_string(ambient_) +
                           ", got " + std::to_string(d));
    }
  }

  template <typename S>
  void check_zero_sum(const std::vector<S>& v) const {
    if (family_ != RootFamily::A) return;
    using T = detail::ScalarTraits<S>;
    S sum = T::zero();
    S scale = T::zero();
    for (const S& x : v) {
      sum = sum + x;
      if (scale < T::abs(x)) scale = T::abs(x);
    }
    double tol = T::chamber_tol;
    if constexpr (std::is_same_v<S, double>) tol = 1e-9 * std::max(1.0, scale);
    if (!T::is_zero(sum, tol)) {
      throw DimensionError("A-type vectors must have coordinate sum zero");
    }
  }

  RootFamily family_{};
  int rank_ = 0;
  int ambient_ = 0;
  std::vector<LinearForm> simple_roots_;
  std::vector<std::vector<Rational>> coweights_;
};

/// Exact duality pairing beta_i(h_{mu_j}); used by invariants and tests.
Rational pairing(const RestrictedRootSystem& sys, int root_index, int coweight_index);

}  // namespace orbitopes

#include "orbitopes/root_system.hpp"

namespace orbitopes {

std::string root_family_name(RootFamily f) {
  switch (f) {
    case RootFamily::A: return "A";
    case RootFamily::B: return "B";
    case RootFamily::C: return "C";
    case RootFamily::BC: return "BC";
    case RootFamily::D: return "D";
  }
  return "?";
}

RestrictedRootSystem RestrictedRootSystem::make(RootFamily family, int rank) {
  int min_rank = family == RootFamily::D ? 2 : 1;
  if (rank < min_rank) {
    throw InvalidRank(root_family_name(family) + "-type requires rank >= " +
                      std::to_string(min_rank) + ", got " + std::to_string(rank));
  }

  RestrictedRootSystem sys;
  sys.family_ = family;
  sys.rank_ = rank;
  sys.ambient_ = family == RootFamily::A ? rank + 1 : rank;

  auto diff = [](int i) {
    LinearForm f;
    f.terms = {{i, Rational(1)}, {i + 1, Rational(-1)}};
    return f;
  };

  for (int j = 0; j < rank; ++j) {
    LinearForm f;
    switch (family) {
      case RootFamily::A:
        f = diff(j);
        break;
      case RootFamily::B:
      case RootFamily::BC:
        if (j + 1 < rank) {
          f = diff(j);
        } else {
          f.terms = {{rank - 1, Rational(1)}};
        }
        break;
      case RootFamily::C:
        if (j + 1 < rank) {
          f = diff(j);
        } else {
          f.terms = {{rank - 1, Rational(2)}};
        }
        break;
      case RootFamily::D:
        if (j + 1 < rank) {
          f = diff(j);
        } else {
          f.terms = {{rank - 2, Rational(1)}, {rank - 1, Rational(1)}};
        }
        break;
    }
    sys.simple_roots_.push_back(std::move(f));
  }

  // Coweights, solved in closed form per family.
  sys.coweights_.assign(rank, std::vector<Rational>(sys.ambient_, Rational(0)));
  for (int j = 0; j < rank; ++j) {
    auto& h = sys.coweights_[j];
    switch (family) {
      case RootFamily::A: {
        // (1,..,1,0,..,0) minus its mean keeps the zero-sum constraint.
        Rational shift(j + 1, rank + 1);
        for (int i = 0; i < sys.ambient_; ++i) {
          h[i] = (i <= j ? Rational(1) : Rational(0)) - shift;
        }
        break;
      }
      case RootFamily::B:
      case RootFamily::BC:
        for (int i = 0; i <= j; ++i) h[i] = Rational(1);
        break;
      case RootFamily::C: {
        Rational unit = (j + 1 == rank) ? Rational(1, 2) : Rational(1);
        for (int i = 0; i <= j; ++i) h[i] = unit;
        break;
      }
      case RootFamily::D:
        if (j < rank - 2) {
          for (int i = 0; i <= j; ++i) h[i] = Rational(1);
        } else if (j == rank - 2) {
          for (int i = 0; i < rank - 1; ++i) h[i] = Rational(1, 2);
          h[rank - 1] = Rational(-1, 2);
        } else {
          for (int i = 0; i < rank; ++i) h[i] = Rational(1, 2);
        }
        break;
    }
  }
  return sys;
}

std::uint64_t RestrictedRootSystem::group_order() const {
  auto mul = [](std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw OverflowError("Weyl group order overflow");
    return a * b;
  };
  std::uint64_t order = 1;
  int n = family_ == RootFamily::A ? rank_ + 1 : rank_;
  for (int i = 2; i <= n; ++i) order = mul(order, static_cast<std::uint64_t>(i));
  int sign_bits = 0;
  if (family_ == RootFamily::B || family_ == RootFamily::C || family_ == RootFamily::BC) {
    sign_bits = rank_;
  } else if (family_ == RootFamily::D) {
    sign_bits = rank_ - 1;
  }
  for (int i = 0; i < sign_bits; ++i) order = mul(order, 2);
  return order;
}

std::vector<std::pair<int, int>> RestrictedRootSystem::dynkin_edges() const {
  std::vector<std::pair<int, int>> edges;
  if (family_ == RootFamily::D) {
    for (int i = 0; i + 2 < rank_; ++i) edges.emplace_back(i, i + 1);
    if (rank_ >= 3) edges.emplace_back(rank_ - 3, rank_ - 1);
    // D_2 has no edges: it is A_1 x A_1.
  } else {
    for (int i = 0; i + 1 < rank_; ++i) edges.emplace_back(i, i + 1);
  }
  return edges;
}

std::vector<std::vector<int>> RestrictedRootSystem::dynkin_components(
    const std::vector<int>& nodes) const {
  std::vector<bool> in_set(rank_, false);
  for (int v : nodes) in_set[v] = true;
  std::vector<std::vector<int>> adj(rank_);
  for (auto [a, b] : dynkin_edges()) {
    if (in_set[a] && in_set[b]) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }
  std::vector<std::vector<int>> comps;
  std::vector<bool> visited(rank_, false);
  for (int v : nodes) {
    if (visited[v]) continue;
    std::vector<int> comp;
    std::vector<int> stack{v};
    visited[v] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : adj[u]) {
        if (!visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Rational pairing(const RestrictedRootSystem& sys, int root_index, int coweight_index) {
  Rational acc(0);
  for (const auto& [idx, coeff] : sys.simple_root(root_index).terms) {
    acc += coeff * sys.coweight(coweight_index)[idx];
  }
  return acc;
}

}  // namespace orbitopes

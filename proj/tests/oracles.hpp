#pragma once

// Brute-force reference implementations and random generators shared by the tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "spincount/fourier.hpp"
#include "spincount/instance.hpp"
#include "spincount/multigraph.hpp"

namespace oracle {

using spincount::CspInstance;
using spincount::PBFunction;
using spincount::Rational;
using spincount::SignedTable;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small nonnegative rational: zero with probability p_zero, else a/b with a in 1..6, b in {1,2,3}.
inline Rational small_rational(Rng& rng, double p_zero = 0.2) {
  if (std::bernoulli_distribution(p_zero)(rng)) return 0;
  Rational r(uniform(rng, 1, 6), uniform(rng, 1, 3));
  r.canonicalize();
  return r;
}

inline PBFunction random_pb(Rng& rng, int arity, double p_zero = 0.2) {
  std::vector<Rational> v(std::size_t{1} << arity);
  for (auto& x : v) x = small_rational(rng, p_zero);
  return PBFunction(arity, std::move(v));
}

inline PBFunction random_permissive(Rng& rng, int arity) { return random_pb(rng, arity, 0.0); }

/// Direct O(4^k) evaluation of the transform definition.
inline SignedTable brute_fourier(const SignedTable& f) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  std::vector<Rational> out(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    Rational s = 0;
    for (std::uint32_t p = 0; p < n; ++p) {
      if (std::popcount(p & x) % 2) {
        s -= f[p];
      } else {
        s += f[p];
      }
    }
    out[x] = s / Rational(n);
  }
  return SignedTable(f.arity(), std::move(out));
}

inline bool brute_in_cP(const SignedTable& f) {
  const SignedTable t = brute_fourier(f);
  return std::all_of(t.values().begin(), t.values().end(), [](const Rational& r) { return r >= 0; });
}

/// Plain enumeration of all assignments in variable order, no pruning.
inline Rational z(const CspInstance& inst) {
  const auto& vars = inst.variables();
  const std::size_t n = vars.size();
  std::vector<std::vector<int>> idx;
  for (const auto& c : inst.constraints()) {
    std::vector<int> s;
    for (const auto& v : c.scope) s.push_back(inst.variable_index(v));
    idx.push_back(s);
  }
  Rational total = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    Rational prod = 1;
    for (std::size_t j = 0; j < idx.size() && prod != 0; ++j) {
      std::uint32_t x = 0;
      for (int v : idx[j]) x = (x << 1) | static_cast<std::uint32_t>((a >> v) & 1u);
      prod *= inst.table(inst.constraints()[j].function)[x];
    }
    total += prod;
  }
  return total;
}

/// Weighted count of matchings leaving exactly `unmatched` vertices uncovered,
/// by enumerating edge subsets. Self-loops never belong to a matching.
inline Rational matchings(const spincount::WeightedMultigraph& g, int unmatched) {
  const auto& edges = g.edges();
  const int n = g.vertex_count();
  Rational total = 0;
  std::vector<int> used(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int covered, Rational w) -> void {
    if (i == edges.size()) {
      if (n - covered == unmatched) total += w;
      return;
    }
    self(self, i + 1, covered, w);
    const auto& e = edges[i];
    if (e.u == e.v || used[e.u] || used[e.v] || e.weight == 0) return;
    used[e.u] = used[e.v] = 1;
    self(self, i + 1, covered + 2, w * e.weight);
    used[e.u] = used[e.v] = 0;
  };
  rec(rec, 0, 0, Rational(1));
  return total;
}

inline Rational perfect_matchings(const spincount::WeightedMultigraph& g) {
  return g.vertex_count() % 2 ? Rational(0) : matchings(g, 0);
}

inline Rational near_perfect_matchings(const spincount::WeightedMultigraph& g) {
  return matchings(g, g.vertex_count() % 2 ? 1 : 2);
}

/// Random instance over the given named functions on n variables x1..xn.
inline CspInstance random_instance(Rng& rng, const std::vector<std::pair<std::string, PBFunction>>& funcs, int n,
                                   int m) {
  CspInstance inst;
  for (const auto& [name, f] : funcs) inst.add_function(name, f);
  for (int i = 1; i <= n; ++i) inst.add_variable("x" + std::to_string(i));
  for (int j = 0; j < m; ++j) {
    const auto& [name, f] = funcs[uniform(rng, 0, static_cast<int>(funcs.size()) - 1)];
    std::vector<std::string> scope;
    for (int p = 0; p < f.arity(); ++p) scope.push_back("x" + std::to_string(uniform(rng, 1, n)));
    inst.add_constraint(name, scope);
  }
  return inst;
}

/// Random holant instance: constraints of the given arities, slots paired uniformly.
inline CspInstance random_holant(Rng& rng, const std::vector<PBFunction>& funcs) {
  CspInstance inst;
  std::vector<int> slot_owner;
  for (std::size_t j = 0; j < funcs.size(); ++j) {
    inst.add_function("g" + std::to_string(j + 1), funcs[j]);
    for (int p = 0; p < funcs[j].arity(); ++p) slot_owner.push_back(static_cast<int>(j));
  }
  std::vector<int> slots(slot_owner.size());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = static_cast<int>(i);
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::string> var_of(slots.size());
  for (std::size_t i = 0; i + 1 < slots.size(); i += 2) {
    const std::string v = "v" + std::to_string(i / 2 + 1);
    var_of[slots[i]] = v;
    var_of[slots[i + 1]] = v;
  }
  std::size_t s = 0;
  for (std::size_t j = 0; j < funcs.size(); ++j) {
    std::vector<std::string> scope;
    for (int p = 0; p < funcs[j].arity(); ++p) scope.push_back(var_of[s++]);
    inst.add_constraint("g" + std::to_string(j + 1), scope);
  }
  return inst;
}

/// Ternary, 1 at 000, zero on odd-weight inputs, random even-weight values.
inline PBFunction random_w_tilde(Rng& rng) {
  std::vector<Rational> v(8);
  v[0] = 1;
  v[3] = small_rational(rng, 0.25);
  v[5] = small_rational(rng, 0.25);
  v[6] = small_rational(rng, 0.25);
  return PBFunction(3, std::move(v));
}

/// Rejection sampling of a function with nonnegative Fourier table.
inline PBFunction random_cP(Rng& rng, int arity) {
  for (;;) {
    PBFunction f = random_pb(rng, arity, 0.3);
    if (brute_in_cP(f)) return f;
  }
}

inline PBFunction random_w_tilde_cP(Rng& rng) {
  for (;;) {
    PBFunction f = random_w_tilde(rng);
    if (brute_in_cP(f)) return f;
  }
}

inline spincount::WeightedMultigraph random_multigraph(Rng& rng, int n, int m, bool integer) {
  spincount::WeightedMultigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("u" + std::to_string(i));
  for (int j = 0; j < m; ++j) {
    const int u = uniform(rng, 0, n - 1);
    const int v = uniform(rng, 0, n - 1);
    g.add_edge(u, v, integer ? Rational(uniform(rng, 1, 3)) : small_rational(rng, 0.0));
  }
  return g;
}

}  // namespace oracle

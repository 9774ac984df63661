#include "spincount/matching.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "spincount/error.hpp"
#include "spincount/fourier.hpp"

namespace spincount {

PBFunction sdp3_lift(const PBFunction& f) {
  if (f.arity() != 2) throw ArityError("sdp3_lift needs a binary function");
  std::vector<Rational> v(8);
  for (std::uint32_t x = 0; x < 8; ++x) {
    const std::uint32_t z = x & 1u;
    const std::uint32_t a = ((x >> 2) & 1u) ^ z;
    const std::uint32_t b = ((x >> 1) & 1u) ^ z;
    v[x] = f[(a << 1) | b];
  }
  PBFunction lifted(3, std::move(v));
  const SignedTable hf = fourier(f);
  const SignedTable hl = fourier(lifted);
  const PBFunction x3 = fn::xor3();
  for (std::uint32_t x = 0; x < 8; ++x) {
    if (hl[x] != hf[x >> 1] * x3[x]) throw VerificationError("lifted Fourier transform does not factor");
  }
  return lifted;
}

CspInstance lift_instance(const CspInstance& inst) {
  std::string fname;
  for (const auto& c : inst.constraints()) {
    if (fname.empty()) fname = c.function;
    if (c.function != fname) throw PreconditionError("lift_instance needs a single-function instance");
  }
  CspInstance out;
  std::string lifted_name;
  if (!fname.empty()) {
    const PBFunction f = inst.as_pb(fname);
    if (f.arity() != 2) throw ArityError("lift_instance needs a binary function");
    lifted_name = fname + "_lift";
    out.add_function(lifted_name, sdp3_lift(f));
  }
  for (const auto& v : inst.variables()) out.add_variable(v);
  const std::string y = inst.fresh_variable("y");
  out.add_variable(y);
  for (const auto& c : inst.constraints()) out.add_constraint(lifted_name, {c.scope[0], c.scope[1], y});
  return out;
}

FourierForm holant_fourier_form(const CspInstance& inst) {
  for (const auto& c : inst.constraints()) {
    const PBFunction f = inst.as_pb(c.function);
    if (f.arity() != 3) throw PreconditionError("function '" + c.function + "' is not ternary");
    if (!in_SDP3(f)) throw PreconditionError("function '" + c.function + "' is not in SDP3");
    if (f.is_zero()) return FourierForm{HolantInstance{}, Rational(0)};
  }
  const HolantInstance h = to_holant(inst);
  const CspInstance& hi = h.instance;
  Rational kappa = 1;
  mpz_mul_2exp(kappa.get_den_mpz_t(), kappa.get_den_mpz_t(), static_cast<mp_bitcnt_t>(hi.variables().size()));
  CspInstance out;
  for (const auto& f : hi.functions()) {
    const SignedTable ft = fourier(f.table);
    if (ft[0] == 0) continue;
    out.add_function(f.name + "_hat", scale(ft, 1 / ft[0]));
  }
  for (const auto& v : hi.variables()) out.add_variable(v);
  for (const auto& c : hi.constraints()) {
    Rational total = 0;
    for (const auto& x : hi.table(c.function).values()) total += x;
    kappa *= total;
    out.add_constraint(c.function + "_hat", c.scope);
  }
  return FourierForm{HolantInstance{out}, kappa};
}

WeightedMultigraph build_triangle_graph(const HolantInstance& h) {
  const CspInstance& inst = h.instance;
  WeightedMultigraph g;
  const auto& cons = inst.constraints();
  for (std::size_t j = 0; j < cons.size(); ++j) {
    const SignedTable& t = inst.table(cons[j].function);
    bool ok = t.arity() == 3 && t[0] == 1;
    for (std::uint32_t x = 0; x < 8 && ok; ++x) {
      if (std::popcount(x) % 2 == 1 && t[x] != 0) ok = false;
    }
    if (ok) ok = t.is_nonnegative();
    if (!ok) {
      throw PreconditionError("constraint " + std::to_string(j + 1) + " ('" + cons[j].function +
                              "') is not 1 at 000 and zero on odd-weight inputs");
    }
    const std::string base = "c" + std::to_string(j + 1) + ".";
    const int v1 = g.add_vertex(base + "1");
    const int v2 = g.add_vertex(base + "2");
    const int v3 = g.add_vertex(base + "3");
    if (t[6] != 0) g.add_edge(v1, v2, t[6], EdgeLabel::WithinTriangle);
    if (t[5] != 0) g.add_edge(v1, v3, t[5], EdgeLabel::WithinTriangle);
    if (t[3] != 0) g.add_edge(v2, v3, t[3], EdgeLabel::WithinTriangle);
  }
  std::vector<std::vector<int>> ends(inst.variables().size());
  for (std::size_t j = 0; j < cons.size(); ++j) {
    for (std::size_t p = 0; p < cons[j].scope.size(); ++p) {
      ends[inst.variable_index(cons[j].scope[p])].push_back(static_cast<int>(3 * j + p));
    }
  }
  for (std::size_t v = 0; v < ends.size(); ++v) {
    if (ends[v].size() != 2) {
      throw PreconditionError("variable '" + inst.variables()[v] + "' does not occur exactly twice");
    }
    g.add_edge(ends[v][0], ends[v][1], 1, EdgeLabel::BetweenTriangles);
  }
  return g;
}

namespace {

class MatchingCounter {
 public:
  MatchingCounter(const std::vector<std::vector<Rational>>& w) : n_(static_cast<int>(w.size())) {
    // Breadth-first relabelling keeps the frontier of the lowest-vertex recursion narrow.
    std::vector<int> order;
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      order.push_back(s);
      for (std::size_t h = order.size() - 1; h < order.size(); ++h) {
        for (int u = 0; u < n_; ++u) {
          if (!seen[u] && u != order[h] && w[order[h]][u] != 0) {
            seen[u] = true;
            order.push_back(u);
          }
        }
      }
    }
    w_.assign(n_, std::vector<Rational>(n_));
    nbr_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == j) continue;
        w_[i][j] = w[order[i]][order[j]];
        if (w_[i][j] != 0) nbr_[i] |= std::uint64_t{1} << j;
      }
    }
  }

  Rational count(int skips) {
    const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    return rec(all, skips);
  }

 private:
  Rational rec(std::uint64_t s, int k) {
    if (s == 0) return k == 0 ? Rational(1) : Rational(0);
    if (std::popcount(s) < k || (std::popcount(s) - k) % 2 != 0) return 0;
    const std::uint64_t key = (s << 2) | static_cast<std::uint64_t>(k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int v = std::countr_zero(s);
    const std::uint64_t rest = s & ~(std::uint64_t{1} << v);
    Rational total = 0;
    if (k > 0) total += rec(rest, k - 1);
    for (std::uint64_t cand = rest & nbr_[v]; cand; cand &= cand - 1) {
      const int u = std::countr_zero(cand);
      const Rational sub = rec(rest & ~(std::uint64_t{1} << u), k);
      if (sub != 0) total += w_[v][u] * sub;
    }
    memo_.emplace(key, total);
    return total;
  }

  int n_;
  std::vector<std::vector<Rational>> w_;
  std::vector<std::uint64_t> nbr_;
  std::unordered_map<std::uint64_t, Rational> memo_;
};

std::vector<std::vector<Rational>> weight_matrix(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    w[e.u][e.v] += e.weight;
    w[e.v][e.u] += e.weight;
  }
  return w;
}

void check_cap(const WeightedMultigraph& g, int cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 62) {
    throw CapacityError("exact matching count: " + std::to_string(g.vertex_count()) +
                        " vertices exceed the cap of " + std::to_string(std::min(cap, 62)));
  }
}

}  // namespace

Rational count_matchings_exact(const std::vector<std::vector<Rational>>& w, int skips) {
  if (w.size() > 62) throw CapacityError("exact matching count supports at most 62 vertices");
  MatchingCounter counter(w);
  return counter.count(skips);
}

Rational count_pm_exact(const WeightedMultigraph& g, int cap) {
  check_cap(g, cap);
  if (g.vertex_count() % 2 == 1) return 0;
  return count_matchings_exact(weight_matrix(g), 0);
}

Rational count_npm_exact(const WeightedMultigraph& g, int cap) {
  check_cap(g, cap);
  return count_matchings_exact(weight_matrix(g), g.vertex_count() % 2 == 0 ? 2 : 1);
}

Integerized integerize(const WeightedMultigraph& g) {
  Integer d = 1;
  for (const auto& e : g.edges()) {
    if (e.weight > 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.weight.get_den_mpz_t());
  }
  Integerized out;
  out.d = d;
  for (const auto& n : g.names()) out.graph.add_vertex(n);
  for (const auto& e : g.edges()) {
    if (e.weight == 0) continue;
    out.graph.add_edge(e.u, e.v, e.weight * Rational(d), e.label);
  }
  return out;
}

}  // namespace spincount

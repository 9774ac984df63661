#include "spincount/properties.hpp"

#include <algorithm>
#include <numeric>

#include "spincount/clone_ops.hpp"
#include "spincount/error.hpp"
#include "spincount/fourier.hpp"

namespace spincount {

namespace {

void require_binary(const PBFunction& f, const char* what) {
  if (f.arity() != 2) throw ArityError(std::string(what) + " needs a binary function");
}

// Union-find with parity, over a fixed number of elements.
struct ParityUnion {
  std::vector<int> parent;
  std::vector<int> parity;  // parity to parent

  explicit ParityUnion(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (parent[r] != r) {
      p ^= parity[r];
      r = parent[r];
    }
    // Path compression.
    int cur = x;
    int cp = p;
    while (parent[cur] != cur) {
      const int next = parent[cur];
      const int np = cp ^ parity[cur];
      parent[cur] = r;
      parity[cur] = cp;
      cur = next;
      cp = np;
    }
    return {r, p};
  }

  void unite(int a, int b, int par) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ par;
  }
};

}  // namespace

bool is_permissive(const PBFunction& f) {
  return std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v > 0; });
}

std::optional<IndexPair> lsm_violation(const PBFunction& f) {
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    if (f[a] == 0) continue;
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      if (f[b] == 0) continue;
      if (f[a | b] * f[a & b] < f[a] * f[b]) return IndexPair{a, b};
    }
  }
  return std::nullopt;
}

bool is_lsm(const PBFunction& f) { return !lsm_violation(f).has_value(); }

bool is_log_modular(const PBFunction& f) {
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (std::uint32_t b = a + 1; b < f.size(); ++b) {
      if (f[a | b] * f[a & b] != f[a] * f[b]) return false;
    }
  }
  return true;
}

bool is_monotone(const PBFunction& f) {
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    for (int i = 0; i < f.arity(); ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (!(x & bit) && f[x] > f[x | bit]) return false;
    }
  }
  return true;
}

std::optional<IndexPair> monotone_on_support_violation(const PBFunction& f) {
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    if (f[a] == 0) continue;
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      if ((a & b) != a || f[b] == 0) continue;
      if (f[a] > f[b]) return IndexPair{a, b};
    }
  }
  return std::nullopt;
}

bool is_monotone_on_support(const PBFunction& f) { return !monotone_on_support_violation(f).has_value(); }

std::optional<IndexPair> join_violation(const PBFunction& f) {
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    if (f[a] == 0) continue;
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      if (f[b] != 0 && f[a | b] == 0) return IndexPair{a, b};
    }
  }
  return std::nullopt;
}

bool is_support_join_closed(const PBFunction& f) { return !join_violation(f).has_value(); }

bool is_pure(const PBFunction& f) {
  const Rational* r = nullptr;
  for (const auto& v : f.values()) {
    if (v == 0) continue;
    if (r && *r != v) return false;
    r = &v;
  }
  return true;
}

bool is_affine(const SupportRelation& r) {
  if (r.tuples.empty()) return true;
  const std::uint32_t a0 = r.tuples.front();
  std::vector<std::uint32_t> basis;
  for (auto t : r.tuples) {
    std::uint32_t v = t ^ a0;
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v) {
      basis.push_back(v);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return (std::size_t{1} << basis.size()) == r.tuples.size();
}

bool is_trivial_binary(const PBFunction& f) {
  require_binary(f, "trivial");
  const auto &a = f[0], &b = f[1], &c = f[2], &d = f[3];
  return a * d == b * c || (b == 0 && c == 0) || (a == 0 && d == 0);
}

bool is_ising(const PBFunction& f) {
  require_binary(f, "ising");
  return f[0] == f[3] && f[1] == f[2];
}

bool is_symmetric(const PBFunction& f) {
  require_binary(f, "symmetric");
  return f[1] == f[2];
}

PropertyReport property_report(const PBFunction& f) {
  PropertyReport r;
  r.permissive = is_permissive(f);
  r.lsm = is_lsm(f);
  r.log_modular = is_log_modular(f);
  r.monotone = is_monotone(f);
  r.monotone_on_support = is_monotone_on_support(f);
  r.support_join_closed = is_support_join_closed(f);
  r.pure = is_pure(f);
  if (r.pure) {
    for (const auto& v : f.values()) {
      if (v != 0) {
        r.pure_value = v;
        break;
      }
    }
  }
  r.affine_support = is_affine(support(f));
  r.in_cP = in_cP(f);
  r.in_SDP3 = in_SDP3(f);
  if (f.arity() == 2) {
    r.trivial = is_trivial_binary(f);
    r.ferromagnetic = r.lsm;
    r.ising = is_ising(f);
    r.symmetric = is_symmetric(f);
  }
  return r;
}

std::optional<ProductFactorization> is_product_type(const PBFunction& f) {
  const int k = f.arity();
  ProductFactorization p;
  if (f.is_zero()) {
    p.zero = true;
    p.constant = 0;
    return p;
  }
  const SupportRelation r = support(f);
  p.forced.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    const int first = bit_at(r.tuples.front(), i, k);
    const bool constant = std::all_of(r.tuples.begin(), r.tuples.end(),
                                      [&](std::uint32_t t) { return bit_at(t, i, k) == first; });
    if (constant) p.forced[i] = first;
  }
  ParityUnion uf(k);
  for (int i = 0; i < k; ++i) {
    if (p.forced[i] != -1) continue;
    for (int j = i + 1; j < k; ++j) {
      if (p.forced[j] != -1) continue;
      bool all_eq = true;
      bool all_ne = true;
      for (auto t : r.tuples) {
        if (bit_at(t, i, k) == bit_at(t, j, k)) {
          all_ne = false;
        } else {
          all_eq = false;
        }
      }
      if (all_eq) uf.unite(i, j, 0);
      if (all_ne) uf.unite(i, j, 1);
    }
  }
  p.component.assign(k, -1);
  p.parity.assign(k, 0);
  std::vector<int> comp_of_root(k, -1);
  for (int i = 0; i < k; ++i) {
    if (p.forced[i] != -1) continue;
    auto [root, par] = uf.find(i);
    if (comp_of_root[root] == -1) {
      comp_of_root[root] = static_cast<int>(p.representative.size());
      p.representative.push_back(i);
    }
    p.component[i] = comp_of_root[root];
    p.parity[i] = par;
  }
  // Representatives are component roots (the least coordinate), so their parity is 0.
  const int m = static_cast<int>(p.representative.size());
  if ((std::size_t{1} << m) != r.tuples.size()) return std::nullopt;

  auto assemble = [&](std::uint32_t comps) {
    std::uint32_t x = 0;
    for (int i = 0; i < k; ++i) {
      int bit = p.forced[i];
      if (bit == -1) bit = p.parity[i] ^ static_cast<int>((comps >> p.component[i]) & 1u);
      x = (x << 1) | static_cast<std::uint32_t>(bit);
    }
    return x;
  };
  const Rational f0 = f[assemble(0)];
  if (f0 == 0) return std::nullopt;
  std::vector<Rational> ratio(m);
  for (int c = 0; c < m; ++c) ratio[c] = f[assemble(std::uint32_t{1} << c)] / f0;
  for (std::uint32_t y = 0; y < (std::uint32_t{1} << m); ++y) {
    Rational expect = f0;
    for (int c = 0; c < m; ++c) {
      if ((y >> c) & 1u) expect *= ratio[c];
    }
    if (f[assemble(y)] != expect) return std::nullopt;
  }
  if (m == 0) {
    p.constant = f0;
    return p;
  }
  for (int c = 0; c + 1 < m; ++c) p.unaries.push_back(fn::unary(1, ratio[c]));
  p.unaries.push_back(fn::unary(f0, f0 * ratio[m - 1]));
  p.constant = 1;
  return p;
}

PBFunction expand(const ProductFactorization& p, int arity) {
  std::vector<Rational> v(std::size_t{1} << arity, Rational(0));
  if (p.zero) return PBFunction(arity, std::move(v));
  for (std::uint32_t x = 0; x < v.size(); ++x) {
    bool ok = true;
    Rational val = p.constant;
    for (int i = 0; i < arity && ok; ++i) {
      const int b = bit_at(x, i, arity);
      if (p.forced[i] != -1) {
        ok = b == p.forced[i];
      } else {
        const int rep = p.representative[p.component[i]];
        ok = (b ^ bit_at(x, rep, arity)) == p.parity[i];
      }
    }
    if (!ok) continue;
    for (std::size_t c = 0; c < p.representative.size(); ++c) {
      val *= p.unaries[c][static_cast<std::uint32_t>(bit_at(x, p.representative[c], arity))];
    }
    v[x] = val;
  }
  return PBFunction(arity, std::move(v));
}

Irredundant irredundant(const PBFunction& f) {
  const int k = f.arity();
  Partition blocks;
  if (f.is_zero()) {
    for (int i = 0; i < k; ++i) blocks.push_back({i});
    return {f, blocks};
  }
  const SupportRelation r = support(f);
  std::vector<int> block_of(k, -1);
  for (int i = 0; i < k; ++i) {
    if (block_of[i] != -1) continue;
    block_of[i] = static_cast<int>(blocks.size());
    blocks.push_back({i});
    for (int j = i + 1; j < k; ++j) {
      if (block_of[j] != -1) continue;
      const bool same = std::all_of(r.tuples.begin(), r.tuples.end(), [&](std::uint32_t t) {
        return bit_at(t, i, k) == bit_at(t, j, k);
      });
      if (same) {
        block_of[j] = block_of[i];
        blocks.back().push_back(j);
      }
    }
  }
  return {identify(f, blocks), blocks};
}

PinMonotoneResult is_pin_monotone(const PBFunction& f) {
  const PBFunction g = irredundant(f).function;
  const int m = g.arity();
  for (int j = 0; j < m; ++j) {
    const std::uint32_t bit = std::uint32_t{1} << (m - 1 - j);
    for (std::uint32_t a = 0; a < g.size(); ++a) {
      if (a & bit) continue;
      const std::uint32_t b = a | bit;
      if (g[a] <= g[b]) continue;
      for (std::uint32_t c = 0; c < g.size(); ++c) {
        if ((c & bit) && g[c] != 0) return PinMonotoneResult{false, j, a, b, c};
      }
    }
  }
  return {};
}

RelClass relation_class(const SupportRelation& r) {
  if (is_affine(r)) return RelClass::Affine;
  for (auto a : r.tuples) {
    for (auto b : r.tuples) {
      if (!r.contains(a & b) || !r.contains(a | b)) return RelClass::Neither;
    }
  }
  return RelClass::IM2;
}

const char* to_string(RelClass c) {
  switch (c) {
    case RelClass::Affine:
      return "Affine";
    case RelClass::IM2:
      return "IM2";
    case RelClass::Neither:
      return "Neither";
  }
  return "?";
}

}  // namespace spincount

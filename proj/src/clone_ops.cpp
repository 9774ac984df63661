#include "spincount/clone_ops.hpp"

#include "spincount/error.hpp"

namespace spincount {

namespace {

void check_coord(const SignedTable& f, int i) {
  if (i < 0 || i >= f.arity()) {
    throw ArityError("coordinate " + std::to_string(i) + " out of range for arity " +
                     std::to_string(f.arity()));
  }
}

}  // namespace

SignedTable bit_flip(const SignedTable& f) {
  const std::uint32_t mask = static_cast<std::uint32_t>(f.size() - 1);
  std::vector<Rational> v(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) v[x] = f[x ^ mask];
  return SignedTable(f.arity(), std::move(v));
}

PBFunction bit_flip(const PBFunction& f) {
  return PBFunction(bit_flip(static_cast<const SignedTable&>(f)));
}

SignedTable permute(const SignedTable& f, const std::vector<int>& perm) {
  const int k = f.arity();
  if (static_cast<int>(perm.size()) != k) throw ArityError("permutation length mismatch");
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 0 || p >= k || seen[p]) throw ArityError("not a permutation");
    seen[p] = true;
  }
  std::vector<Rational> v(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    std::uint32_t y = 0;
    for (int i = 0; i < k; ++i) y = (y << 1) | static_cast<std::uint32_t>(bit_at(x, perm[i], k));
    v[x] = f[y];
  }
  return SignedTable(k, std::move(v));
}

PBFunction permute(const PBFunction& f, const std::vector<int>& perm) {
  return PBFunction(permute(static_cast<const SignedTable&>(f), perm));
}

PBFunction product(const PBFunction& f, const PBFunction& g) {
  if (f.arity() != g.arity()) throw ArityError("product needs equal arities");
  std::vector<Rational> v(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) v[x] = f[x] * g[x];
  return PBFunction(f.arity(), std::move(v));
}

PBFunction sum_out(const PBFunction& f, int i) {
  check_coord(f, i);
  const int k = f.arity();
  const int shift = k - 1 - i;
  std::vector<Rational> v(f.size() / 2);
  for (std::uint32_t y = 0; y < v.size(); ++y) {
    const std::uint32_t high = (y >> shift) << (shift + 1);
    const std::uint32_t low = y & ((std::uint32_t{1} << shift) - 1);
    v[y] = f[high | low] + f[high | (std::uint32_t{1} << shift) | low];
  }
  return PBFunction(k - 1, std::move(v));
}

PBFunction add_fictitious(const PBFunction& f) {
  std::vector<Rational> v(f.size() * 2);
  for (std::uint32_t x = 0; x < v.size(); ++x) v[x] = f[x >> 1];
  return PBFunction(f.arity() + 1, std::move(v));
}

PBFunction pin(const PBFunction& f, int i, int b) {
  check_coord(f, i);
  if (b != 0 && b != 1) throw InputError("pin value must be 0 or 1");
  const int k = f.arity();
  const int shift = k - 1 - i;
  std::vector<Rational> v(f.size() / 2);
  for (std::uint32_t y = 0; y < v.size(); ++y) {
    const std::uint32_t high = (y >> shift) << (shift + 1);
    const std::uint32_t low = y & ((std::uint32_t{1} << shift) - 1);
    v[y] = f[high | (static_cast<std::uint32_t>(b) << shift) | low];
  }
  return PBFunction(k - 1, std::move(v));
}

PBFunction identify(const PBFunction& f, const std::vector<std::vector<int>>& blocks) {
  const int k = f.arity();
  std::vector<int> block_of(k, -1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty()) throw InputError("empty block in partition");
    for (int i : blocks[j]) {
      check_coord(f, i);
      if (block_of[i] != -1) throw InputError("coordinate in two blocks");
      block_of[i] = static_cast<int>(j);
    }
  }
  for (int i = 0; i < k; ++i) {
    if (block_of[i] == -1) throw InputError("partition does not cover every coordinate");
  }
  const int m = static_cast<int>(blocks.size());
  std::vector<Rational> v(std::size_t{1} << m);
  for (std::uint32_t y = 0; y < v.size(); ++y) {
    std::uint32_t x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | static_cast<std::uint32_t>(bit_at(y, block_of[i], m));
    v[y] = f[x];
  }
  return PBFunction(m, std::move(v));
}

}  // namespace spincount

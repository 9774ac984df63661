#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spincount/function.hpp"

namespace spincount {

using Partition = std::vector<std::vector<int>>;

struct PropertyReport {
  bool permissive = false;
  bool lsm = false;
  bool log_modular = false;
  bool monotone = false;
  bool monotone_on_support = false;
  bool support_join_closed = false;
  bool pure = false;
  std::optional<Rational> pure_value;
  bool affine_support = false;
  bool in_cP = false;
  bool in_SDP3 = false;
  // Present only for arity 2.
  std::optional<bool> trivial;
  std::optional<bool> ferromagnetic;
  std::optional<bool> ising;
  std::optional<bool> symmetric;
};

PropertyReport property_report(const PBFunction& f);

bool is_permissive(const PBFunction& f);
bool is_lsm(const PBFunction& f);
bool is_log_modular(const PBFunction& f);
bool is_monotone(const PBFunction& f);
bool is_monotone_on_support(const PBFunction& f);
bool is_support_join_closed(const PBFunction& f);
/// All nonzero values coincide. The all-zero function counts as pure.
bool is_pure(const PBFunction& f);
bool is_affine(const SupportRelation& r);

/// Binary only: log-modular, g(x)EQ(x,y) or g(x)NEQ(x,y).
bool is_trivial_binary(const PBFunction& f);
bool is_ising(const PBFunction& f);
bool is_symmetric(const PBFunction& f);

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

/// Least (a, b) in index order with f(a|b) f(a&b) < f(a) f(b).
std::optional<IndexPair> lsm_violation(const PBFunction& f);
/// Least (a, b) with a <= b, f(a) > f(b) > 0.
std::optional<IndexPair> monotone_on_support_violation(const PBFunction& f);
/// Least (a, b) of support tuples whose join lies outside the support.
std::optional<IndexPair> join_violation(const PBFunction& f);

/// Membership in the clone generated by NEQ and all unaries, with its factorization.
struct ProductFactorization {
  // Per coordinate: forced value (0/1) or -1 when the coordinate is free.
  std::vector<int> forced;
  // Per free coordinate: its component and its parity relative to the representative.
  std::vector<int> component;
  std::vector<int> parity;
  std::vector<int> representative;  // one coordinate per component
  // f(x) = constant * prod_c unaries[c](x_rep(c)) on the support.
  std::vector<PBFunction> unaries;
  Rational constant{1};
  bool zero = false;
};

std::optional<ProductFactorization> is_product_type(const PBFunction& f);
/// Reassembles the function described by a factorization.
PBFunction expand(const ProductFactorization& p, int arity);

struct Irredundant {
  PBFunction function;
  Partition blocks;
};

Irredundant irredundant(const PBFunction& f);

struct PinMonotoneResult {
  bool ok = true;
  // On failure, coordinates refer to the irredundant form.
  int coordinate = -1;
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
};

PinMonotoneResult is_pin_monotone(const PBFunction& f);

enum class RelClass { Affine, IM2, Neither };

RelClass relation_class(const SupportRelation& r);
const char* to_string(RelClass c);

}  // namespace spincount

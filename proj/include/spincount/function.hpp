#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spincount/rational.hpp"

namespace spincount {

inline constexpr int kMaxArity = 16;

using Bits = std::vector<int>;

/// Table index of a bit string; x[0] is the most significant bit.
std::uint32_t index_of(const Bits& x);
Bits bits_of(std::uint32_t index, int arity);

/// Bit i (0-based, from the left) of a table index of the given arity.
inline int bit_at(std::uint32_t index, int i, int arity) {
  return static_cast<int>((index >> (arity - 1 - i)) & 1u);
}

/// Truth table of exact rationals of any sign.
class SignedTable {
 public:
  SignedTable();
  SignedTable(int arity, std::vector<Rational> values);

  int arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::uint32_t index) const { return values_[index]; }
  const Rational& at(const Bits& x) const;

  bool is_zero() const;
  bool is_nonnegative() const;

  friend bool operator==(const SignedTable& a, const SignedTable& b) {
    return a.arity_ == b.arity_ && a.values_ == b.values_;
  }

 protected:
  int arity_;
  std::vector<Rational> values_;
};

/// Truth table with every entry a nonnegative exact rational.
class PBFunction : public SignedTable {
 public:
  PBFunction() = default;
  PBFunction(int arity, std::vector<Rational> values);
  explicit PBFunction(const SignedTable& table);
};

SignedTable scale(const SignedTable& t, const Rational& c);
PBFunction scale(const PBFunction& f, const Rational& c);

/// Values in index order separated by single spaces.
std::string table_text(const SignedTable& t);

/// Parses `<v_0> ... <v_{2^k-1}>` given the arity.
SignedTable parse_table(int arity, const std::vector<std::string>& tokens);

/// Relation underlying a function, as a sorted set of table indices.
struct SupportRelation {
  int arity = 0;
  std::vector<std::uint32_t> tuples;

  bool contains(std::uint32_t t) const;
  friend bool operator==(const SupportRelation&, const SupportRelation&) = default;
};

SupportRelation support(const SignedTable& f);
SupportRelation make_relation(int arity, std::vector<std::uint32_t> tuples);
/// The 0/1 indicator of a relation.
PBFunction indicator(const SupportRelation& r);

const Rational& eval(const PBFunction& f, const Bits& x);

namespace fn {

PBFunction constant(int arity, const Rational& value);
PBFunction unary(const Rational& a, const Rational& b);
/// [[a, b], [c, d]] = (f(00), f(01), f(10), f(11)).
PBFunction binary(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
PBFunction eq();
PBFunction neq();
PBFunction eq3();
PBFunction xor3();
PBFunction delta0();
PBFunction delta1();

}  // namespace fn

}  // namespace spincount

#include "spincount/function.hpp"

#include <algorithm>

#include "spincount/error.hpp"

namespace spincount {

std::uint32_t index_of(const Bits& x) {
  std::uint32_t idx = 0;
  for (int b : x) {
    if (b != 0 && b != 1) throw InputError("bit string entries must be 0 or 1");
    idx = (idx << 1) | static_cast<std::uint32_t>(b);
  }
  return idx;
}

Bits bits_of(std::uint32_t index, int arity) {
  Bits x(arity);
  for (int i = 0; i < arity; ++i) x[i] = bit_at(index, i, arity);
  return x;
}

SignedTable::SignedTable() : arity_(0), values_{Rational(0)} {}

SignedTable::SignedTable(int arity, std::vector<Rational> values)
    : arity_(arity), values_(std::move(values)) {
  if (arity < 0) throw ArityError("negative arity");
  if (arity > kMaxArity) {
    throw CapacityError("arity " + std::to_string(arity) + " exceeds cap " + std::to_string(kMaxArity));
  }
  if (values_.size() != (std::size_t{1} << arity)) {
    throw ArityError("table of arity " + std::to_string(arity) + " needs " +
                     std::to_string(std::size_t{1} << arity) + " values, got " +
                     std::to_string(values_.size()));
  }
  for (auto& v : values_) v.canonicalize();
}

const Rational& SignedTable::at(const Bits& x) const {
  if (static_cast<int>(x.size()) != arity_) {
    throw ArityError("bit string of length " + std::to_string(x.size()) + " for arity " +
                     std::to_string(arity_));
  }
  return values_[index_of(x)];
}

bool SignedTable::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

bool SignedTable::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v >= 0; });
}

PBFunction::PBFunction(int arity, std::vector<Rational> values)
    : SignedTable(arity, std::move(values)) {
  if (!is_nonnegative()) throw InputError("function values must be nonnegative");
}

PBFunction::PBFunction(const SignedTable& table) : SignedTable(table) {
  if (!is_nonnegative()) throw InputError("function values must be nonnegative");
}

SignedTable scale(const SignedTable& t, const Rational& c) {
  std::vector<Rational> v(t.values());
  for (auto& x : v) x *= c;
  return SignedTable(t.arity(), std::move(v));
}

PBFunction scale(const PBFunction& f, const Rational& c) {
  return PBFunction(scale(static_cast<const SignedTable&>(f), c));
}

std::string table_text(const SignedTable& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += to_string(t[static_cast<std::uint32_t>(i)]);
  }
  return out;
}

SignedTable parse_table(int arity, const std::vector<std::string>& tokens) {
  if (arity < 0) throw ArityError("negative arity");
  if (arity > kMaxArity) throw CapacityError("arity exceeds cap");
  std::vector<Rational> v;
  v.reserve(tokens.size());
  for (const auto& t : tokens) v.push_back(parse_rational(t));
  return SignedTable(arity, std::move(v));
}

bool SupportRelation::contains(std::uint32_t t) const {
  return std::binary_search(tuples.begin(), tuples.end(), t);
}

SupportRelation support(const SignedTable& f) {
  SupportRelation r;
  r.arity = f.arity();
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0) r.tuples.push_back(i);
  }
  return r;
}

SupportRelation make_relation(int arity, std::vector<std::uint32_t> tuples) {
  if (arity < 0 || arity > kMaxArity) throw ArityError("relation arity out of range");
  for (auto t : tuples) {
    if (t >= (std::uint32_t{1} << arity)) throw ArityError("tuple out of range for relation arity");
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  return SupportRelation{arity, std::move(tuples)};
}

PBFunction indicator(const SupportRelation& r) {
  std::vector<Rational> v(std::size_t{1} << r.arity, Rational(0));
  for (auto t : r.tuples) v[t] = 1;
  return PBFunction(r.arity, std::move(v));
}

const Rational& eval(const PBFunction& f, const Bits& x) { return f.at(x); }

namespace fn {

PBFunction constant(int arity, const Rational& value) {
  if (arity < 0 || arity > kMaxArity) throw ArityError("arity out of range");
  return PBFunction(arity, std::vector<Rational>(std::size_t{1} << arity, value));
}

PBFunction unary(const Rational& a, const Rational& b) { return PBFunction(1, {a, b}); }

PBFunction binary(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return PBFunction(2, {a, b, c, d});
}

PBFunction eq() { return binary(1, 0, 0, 1); }
PBFunction neq() { return binary(0, 1, 1, 0); }
PBFunction eq3() { return PBFunction(3, {1, 0, 0, 0, 0, 0, 0, 1}); }
PBFunction xor3() { return PBFunction(3, {1, 0, 0, 1, 0, 1, 1, 0}); }
PBFunction delta0() { return unary(1, 0); }
PBFunction delta1() { return unary(0, 1); }

}  // namespace fn

}  // namespace spincount

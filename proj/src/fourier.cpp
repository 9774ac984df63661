#include "spincount/fourier.hpp"

#include <bit>

namespace spincount {

namespace {

void walsh_hadamard(std::vector<Rational>& v) {
  Rational a;
  Rational b;
  for (std::size_t len = 1; len < v.size(); len <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        a = v[j];
        b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

}  // namespace

SignedTable fourier(const SignedTable& f) {
  std::vector<Rational> v(f.values());
  walsh_hadamard(v);
  Rational inv(1, 1);
  mpz_mul_2exp(inv.get_den_mpz_t(), inv.get_den_mpz_t(), static_cast<mp_bitcnt_t>(f.arity()));
  for (auto& x : v) x *= inv;
  return SignedTable(f.arity(), std::move(v));
}

SignedTable inverse_fourier(const SignedTable& F) {
  std::vector<Rational> v(F.values());
  walsh_hadamard(v);
  return SignedTable(F.arity(), std::move(v));
}

bool in_cP(const SignedTable& f) { return fourier(f).is_nonnegative(); }

bool in_SDP3(const SignedTable& f) {
  if (f.arity() != 3) return false;
  const SignedTable h = fourier(f);
  for (std::uint32_t x = 0; x < 8; ++x) {
    if (std::popcount(x) % 2 == 1) {
      if (h[x] != 0) return false;
    } else if (h[x] < 0) {
      return false;
    }
  }
  return true;
}

}  // namespace spincount

#pragma once

#include "spincount/function.hpp"

namespace spincount {

/// f^(x) = 2^{-k} sum_p (-1)^{p.x} f(p), via the fast Walsh-Hadamard transform.
SignedTable fourier(const SignedTable& f);

/// g(x) = sum_p (-1)^{p.x} F(p).
SignedTable inverse_fourier(const SignedTable& F);

/// Every Fourier coefficient is nonnegative.
bool in_cP(const SignedTable& f);

/// Arity 3, in the class above, and zero Fourier mass on odd-weight inputs.
bool in_SDP3(const SignedTable& f);

}  // namespace spincount

#pragma once

#include "spincount/instance.hpp"
#include "spincount/multigraph.hpp"

namespace spincount {

/// f'(x, y, z) = f(x xor z, y xor z). Checks the Fourier factorization f^' = f^ * xor3.
PBFunction sdp3_lift(const PBFunction& f);

/// Adds one shared variable and lifts every constraint of a single-binary-function
/// instance; Z doubles.
CspInstance lift_instance(const CspInstance& inst);

struct FourierForm {
  HolantInstance holant;  // functions have value 1 at 000 and vanish on odd-weight inputs
  Rational kappa;         // Z(input) = kappa * Z(holant)
};

FourierForm holant_fourier_form(const CspInstance& inst);

/// One triangle c<j>.1, c<j>.2, c<j>.3 per constraint, weight-1 edges per variable.
WeightedMultigraph build_triangle_graph(const HolantInstance& h);

/// Weighted count of perfect matchings. Loops never participate.
Rational count_pm_exact(const WeightedMultigraph& g, int cap = 30);
/// Weighted count of matchings leaving exactly two vertices (one, for odd order) unmatched.
Rational count_npm_exact(const WeightedMultigraph& g, int cap = 30);

/// Exact weighted count of matchings on a symmetric weight matrix (diagonal
/// ignored) that leave exactly `skips` vertices unmatched. At most 62 vertices.
Rational count_matchings_exact(const std::vector<std::vector<Rational>>& w, int skips);

struct Integerized {
  // Each edge of integer weight m stands for m parallel unit edges; zero-weight edges are dropped.
  WeightedMultigraph graph;
  Integer d;
};

Integerized integerize(const WeightedMultigraph& g);

}  // namespace spincount

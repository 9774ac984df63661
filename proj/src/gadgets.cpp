#include "spincount/gadgets.hpp"

#include "spincount/clone_ops.hpp"
#include "spincount/error.hpp"

namespace spincount {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void ensure(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

PpsFormula formula(int n_free, int n_bound, std::vector<PpsAtom> atoms) {
  return PpsFormula{n_free, n_bound, std::move(atoms)};
}

struct DeltaNames {
  std::string zero = "delta0";
  std::string one = "delta1";
  const std::string& operator[](int b) const { return b ? one : zero; }
};

// Pins every coordinate where a and b agree (via delta atoms on bound
// variables, in coordinate order) and identifies the rest: with one free
// variable all differing coordinates merge; with two, coordinates where a is 0
// become v1 and those where a is 1 become v2.
PpsFormula pinned_formula(const std::string& name, int k, std::uint32_t a, std::uint32_t b, int n_free,
                          const DeltaNames& deltas) {
  std::vector<int> scope(k);
  std::vector<PpsAtom> pins;
  int next = n_free;
  for (int i = 0; i < k; ++i) {
    const int ai = bit_at(a, i, k);
    if (ai == bit_at(b, i, k)) {
      scope[i] = next;
      pins.push_back(PpsAtom{deltas[ai], {next}});
      ++next;
    } else {
      scope[i] = (n_free == 2 && ai == 1) ? 1 : 0;
    }
  }
  std::vector<PpsAtom> atoms{PpsAtom{name, scope}};
  atoms.insert(atoms.end(), pins.begin(), pins.end());
  return formula(n_free, next - n_free, std::move(atoms));
}

// Least (c, d) with c <= d and 0 < f(c) < f(d): the bit-flip is not monotone on its support.
std::optional<IndexPair> increasing_pair(const PBFunction& f) {
  for (std::uint32_t c = 0; c < f.size(); ++c) {
    if (f[c] == 0) continue;
    for (std::uint32_t d = 0; d < f.size(); ++d) {
      if ((c & d) == c && f[c] < f[d]) return IndexPair{c, d};
    }
  }
  return std::nullopt;
}

std::optional<IndexPair> non_pure_pair(const PBFunction& f) {
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    if (f[a] == 0) continue;
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      if (f[a] < f[b]) return IndexPair{a, b};
    }
  }
  return std::nullopt;
}

std::string fname(std::size_t i) { return "f" + std::to_string(i + 1); }

}  // namespace

bool is_strictly_increasing_permissive(const PBFunction& u) {
  return u.arity() == 1 && u[0] > 0 && u[0] < u[1];
}

bool is_strictly_decreasing_permissive(const PBFunction& u) {
  return u.arity() == 1 && u[1] > 0 && u[1] < u[0];
}

Gadget symmetrize(const PBFunction& f, int mode, const std::optional<PBFunction>& up) {
  require(f.arity() == 2, "symmetrize needs a binary function");
  const bool trivial = is_trivial_binary(f);
  const bool lsm = is_lsm(f);
  Registry base{{"f", f}};
  Gadget g;
  PpsFormula psi;
  switch (mode) {
    case 1:
      require(!trivial, "symmetrize mode 1 needs f nontrivial");
      require(!lsm, "symmetrize mode 1 needs f non-lsm");
      psi = formula(2, 0, {{"f", {0, 1}}, {"f", {1, 0}}});
      break;
    case 2:
      require(!trivial, "symmetrize mode 2 needs f nontrivial");
      require(lsm, "symmetrize mode 2 needs f lsm");
      psi = formula(2, 1, {{"f", {0, 2}}, {"f", {1, 2}}});
      break;
    case 3:
      require(!trivial, "symmetrize mode 3 needs f nontrivial");
      require(lsm, "symmetrize mode 3 needs f lsm");
      require(is_ising(f), "symmetrize mode 3 needs f Ising");
      require(up.has_value() && is_strictly_increasing_permissive(*up),
              "symmetrize mode 3 needs a strictly increasing permissive up");
      base.emplace("up", *up);
      psi = formula(2, 1, {{"f", {0, 2}}, {"f", {1, 2}}, {"up", {2}}});
      break;
    default:
      throw InputError("symmetrize mode must be 1, 2 or 3");
  }
  g.value = g.trace.add("sym", std::move(psi), base);
  g.result = "sym";
  const PBFunction& s = g.value;
  ensure(is_symmetric(s), "symmetrized function is not symmetric");
  ensure(!is_trivial_binary(s), "symmetrized function is trivial");
  if (mode == 1) ensure(!is_lsm(s), "symmetrized function is lsm");
  if (mode >= 2) ensure(is_lsm(s), "symmetrized function is not lsm");
  if (mode == 3) ensure(!is_ising(s), "symmetrized function is Ising");
  return g;
}

UpDown make_up_down(const PBFunction& f) {
  require(f.arity() == 2, "make_up_down needs a binary function");
  // 4 f^01 = a - b + c - d, 4 f^10 = a + b - c - d.
  const Rational f01 = (f[0] - f[1] + f[2] - f[3]) / 4;
  const Rational f10 = (f[0] + f[1] - f[2] - f[3]) / 4;
  if (f01 * f10 >= 0) {
    throw PreconditionError("make_up_down needs middle Fourier coefficients of opposite signs, got f01=" +
                            to_string(f01) + " f10=" + to_string(f10));
  }
  const Registry base{{"f", f}};
  UpDown r;
  std::string h = "f";
  if (f01 < 0) {
    r.trace.add("fswap", formula(2, 0, {{"f", {1, 0}}}), base);
    h = "fswap";
  }
  r.up = r.trace.add("up", formula(1, 1, {{h, {0, 1}}}), base);
  r.down = r.trace.add("down", formula(1, 1, {{h, {1, 0}}}), base);
  if (!is_strictly_increasing_permissive(r.up) || !is_strictly_decreasing_permissive(r.down)) {
    throw PreconditionError("make_up_down needs f nontrivial; the realised unaries are not permissive");
  }
  return r;
}

Gadget extract_nonlsm_binary(const PBFunction& f, const PBFunction& g) {
  const auto witness = lsm_violation(f);
  require(witness.has_value(), "extract_nonlsm_binary needs f non-lsm");
  require(g.arity() == 2 && !is_trivial_binary(g), "extract_nonlsm_binary needs g binary nontrivial");
  const Registry base{{"f", f}, {"g", g}, {"delta0", fn::delta0()}, {"delta1", fn::delta1()}};
  Gadget out;
  const auto [a, b] = *witness;
  const PBFunction fp = out.trace.add("fp", pinned_formula("f", f.arity(), a, b, 2, DeltaNames{}), base);
  ensure(fp[1] * fp[2] > fp[0] * fp[3], "pinned binary does not violate lsm at (0,1),(1,0)");
  if (fp[0] != 0 || fp[3] != 0) {
    out.value = fp;
    out.result = "fp";
  } else if (!is_lsm(g)) {
    out.value = g;
    out.result = "g";
  } else {
    out.value = out.trace.add("gp", formula(2, 1, {{"g", {0, 2}}, {"fp", {2, 1}}}), base);
    out.result = "gp";
  }
  ensure(out.value.arity() == 2 && !is_trivial_binary(out.value) && !is_lsm(out.value),
         "extracted binary is not nontrivial non-lsm");
  return out;
}

ApproxPin approx_pin(const PBFunction& u, const Rational& epsilon) {
  require(epsilon > 0, "approx_pin needs a positive epsilon");
  require(u.arity() == 1, "approx_pin needs a unary function");
  int off_index = -1;
  if (u[1] == 1 && u[0] > 0 && u[0] < 1) off_index = 0;
  if (u[0] == 1 && u[1] > 0 && u[1] < 1) off_index = 1;
  require(off_index != -1, "approx_pin needs a normalized strictly monotone permissive unary");
  const Rational off = u[static_cast<std::uint32_t>(off_index)];
  unsigned long k = 1;
  Rational p = off;
  while (p > epsilon) {
    p *= off;
    ++k;
  }
  ApproxPin r;
  r.k = k;
  r.value = off_index == 0 ? fn::unary(p, 1) : fn::unary(1, p);
  return r;
}

NormalizedUnary normalize_unary(const PBFunction& u, Direction direction) {
  if (direction == Direction::Up) {
    require(is_strictly_increasing_permissive(u), "normalize_unary(up) needs a strictly increasing permissive unary");
    return {fn::unary(u[0] / u[1], 1), u[1]};
  }
  require(is_strictly_decreasing_permissive(u), "normalize_unary(down) needs a strictly decreasing permissive unary");
  return {fn::unary(1, u[1] / u[0]), u[0]};
}

const char* to_string(PinningTag tag) {
  switch (tag) {
    case PinningTag::AllPure:
      return "AllPure";
    case PinningTag::MonotoneFamily:
      return "MonotoneFamily";
    case PinningTag::FlippedMonotoneFamily:
      return "FlippedMonotoneFamily";
    case PinningTag::BothUnaries:
      return "BothUnaries";
  }
  return "?";
}

Registry pinning_registry(const std::vector<PBFunction>& F) {
  Registry reg{{"delta0", fn::delta0()}, {"delta1", fn::delta1()}};
  for (std::size_t i = 0; i < F.size(); ++i) reg.emplace(fname(i), F[i]);
  return reg;
}

namespace {

// Second case of the analysis, run in a world that is either F itself or its
// bit-flip. In the flipped world the emitted formulas name the original
// functions with the pins exchanged, so every step evaluates to the bit-flip of
// its flipped-world counterpart; up and down swap roles accordingly.
PinningVerdict monotone_case(const std::vector<PBFunction>& world, const Registry& base, bool flipped) {
  PinningVerdict v;
  std::size_t fi = world.size();
  IndexPair cd{};
  for (std::size_t i = 0; i < world.size(); ++i) {
    if (auto p = increasing_pair(world[i])) {
      fi = i;
      cd = *p;
      break;
    }
  }
  std::size_t gi = world.size();
  IndexPair ab{};
  for (std::size_t i = 0; i < world.size(); ++i) {
    if (auto p = join_violation(world[i])) {
      gi = i;
      ab = *p;
      break;
    }
  }
  if (gi == world.size()) {
    v.tag = flipped ? PinningTag::FlippedMonotoneFamily : PinningTag::MonotoneFamily;
    v.witness = static_cast<int>(fi);
    return v;
  }
  DeltaNames deltas;
  if (flipped) std::swap(deltas.zero, deltas.one);
  const std::string up = flipped ? "down" : "up";
  const std::string down = flipped ? "up" : "down";
  v.trace.add(up, pinned_formula(fname(fi), world[fi].arity(), cd.first, cd.second, 1, deltas), base);
  v.trace.add("h", pinned_formula(fname(gi), world[gi].arity(), ab.first, ab.second, 2, deltas), base);
  v.trace.add("hs", formula(2, 0, {{"h", {0, 1}}, {"h", {1, 0}}}), base);
  v.trace.add(down, formula(1, 1, {{"hs", {0, 1}}, {up, {1}}}), base);
  v.tag = PinningTag::BothUnaries;
  return v;
}

}  // namespace

PinningVerdict pinning_analysis(const std::vector<PBFunction>& F) {
  if (F.empty()) throw InputError("pinning_analysis needs a nonempty set");
  const Registry base = pinning_registry(F);
  std::vector<PBFunction> flipped;
  for (const auto& f : F) flipped.push_back(bit_flip(f));

  std::optional<std::size_t> not_mos;
  std::optional<std::size_t> flip_not_mos;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (!not_mos && !is_monotone_on_support(F[i])) not_mos = i;
    if (!flip_not_mos && increasing_pair(F[i])) flip_not_mos = i;
  }

  PinningVerdict v;
  if (not_mos && flip_not_mos) {
    const auto [a, b] = *monotone_on_support_violation(F[*not_mos]);
    const auto [c, d] = *increasing_pair(F[*flip_not_mos]);
    v.trace.add("down", pinned_formula(fname(*not_mos), F[*not_mos].arity(), a, b, 1, DeltaNames{}), base);
    v.trace.add("up", pinned_formula(fname(*flip_not_mos), F[*flip_not_mos].arity(), c, d, 1, DeltaNames{}), base);
    v.tag = PinningTag::BothUnaries;
  } else if (flip_not_mos) {
    v = monotone_case(F, base, false);
  } else if (not_mos) {
    v = monotone_case(flipped, base, true);
  } else {
    std::size_t gi = F.size();
    IndexPair ab{};
    for (std::size_t i = 0; i < F.size(); ++i) {
      if (auto p = non_pure_pair(F[i])) {
        gi = i;
        ab = *p;
        break;
      }
    }
    if (gi == F.size()) {
      v.tag = PinningTag::AllPure;
      return v;
    }
    const PBFunction& h =
        v.trace.add("h", pinned_formula(fname(gi), F[gi].arity(), ab.first, ab.second, 2, DeltaNames{}), base);
    ensure(h[0] == 0 && h[3] == 0 && h[1] > 0 && h[1] < h[2], "pinned binary is not an increasing weighted NEQ");
    v.trace.add("up", formula(1, 1, {{"h", {0, 1}}, {"h", {0, 1}}, {"h", {1, 0}}}), base);
    v.trace.add("down", formula(1, 1, {{"h", {0, 1}}, {"h", {1, 0}}, {"h", {1, 0}}}), base);
    v.tag = PinningTag::BothUnaries;
  }

  if (v.tag == PinningTag::BothUnaries) {
    v.up = v.trace.value("up");
    v.down = v.trace.value("down");
    ensure(is_strictly_increasing_permissive(*v.up), "pinning witness up is not strictly increasing permissive");
    ensure(is_strictly_decreasing_permissive(*v.down), "pinning witness down is not strictly decreasing permissive");
    verify_trace(v.trace, base);
  }
  return v;
}

}  // namespace spincount

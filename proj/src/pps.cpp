#include "spincount/pps.hpp"

#include <sstream>

#include "spincount/error.hpp"

namespace spincount {

namespace {

const PBFunction& resolve(const std::string& name, const Registry& registry) {
  auto it = registry.find(name);
  if (it == registry.end()) throw InputError("unknown function '" + name + "' in pps formula");
  return it->second;
}

}  // namespace

PBFunction eval_pps(const PpsFormula& psi, const Registry& registry) {
  const int n = psi.n_free + psi.n_bound;
  if (psi.n_free < 0 || psi.n_bound < 0) throw InputError("negative variable count in pps formula");
  if (psi.n_free > kMaxArity) throw CapacityError("pps formula has too many free variables");
  if (n > 24) throw CapacityError("pps formula has too many variables to evaluate");
  std::vector<const PBFunction*> fns;
  for (const auto& atom : psi.atoms) {
    const PBFunction& f = resolve(atom.name, registry);
    if (static_cast<int>(atom.scope.size()) != f.arity()) {
      throw ArityError("atom '" + atom.name + "' has scope of length " + std::to_string(atom.scope.size()) +
                       " but arity " + std::to_string(f.arity()));
    }
    for (int v : atom.scope) {
      if (v < 0 || v >= n) throw InputError("atom '" + atom.name + "' uses an out-of-range variable");
    }
    fns.push_back(&f);
  }
  std::vector<Rational> out(std::size_t{1} << psi.n_free, Rational(0));
  Rational term;
  for (std::uint64_t sigma = 0; sigma < (std::uint64_t{1} << n); ++sigma) {
    // Variable v takes bit (n-1-v) of sigma, so free variables are the high bits.
    term = 1;
    for (std::size_t j = 0; j < psi.atoms.size() && term != 0; ++j) {
      std::uint32_t idx = 0;
      for (int v : psi.atoms[j].scope) idx = (idx << 1) | static_cast<std::uint32_t>((sigma >> (n - 1 - v)) & 1u);
      term *= (*fns[j])[idx];
    }
    if (term != 0) out[sigma >> psi.n_bound] += term;
  }
  return PBFunction(psi.n_free, std::move(out));
}

std::string to_text(const PpsFormula& psi) {
  std::ostringstream os;
  os << "pps " << psi.n_free << ' ' << psi.n_bound;
  for (const auto& atom : psi.atoms) {
    os << " ; " << atom.name;
    for (int v : atom.scope) os << " v" << (v + 1);
  }
  return os.str();
}

PpsFormula parse_pps(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  PpsFormula psi;
  if (!(is >> tok) || tok != "pps" || !(is >> psi.n_free >> psi.n_bound)) {
    throw InputError("pps formula must start with 'pps <n_free> <n_bound>'");
  }
  PpsAtom* current = nullptr;
  while (is >> tok) {
    if (tok == ";") {
      psi.atoms.emplace_back();
      current = &psi.atoms.back();
      continue;
    }
    if (!current) throw InputError("expected ';' before '" + tok + "'");
    if (current->name.empty()) {
      current->name = tok;
      continue;
    }
    if (tok.size() < 2 || tok[0] != 'v') throw InputError("malformed pps variable '" + tok + "'");
    int v = 0;
    try {
      v = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw InputError("malformed pps variable '" + tok + "'");
    }
    if (v < 1 || v > psi.n_free + psi.n_bound) throw InputError("pps variable out of range: " + tok);
    current->scope.push_back(v - 1);
  }
  for (const auto& atom : psi.atoms) {
    if (atom.name.empty()) throw InputError("empty atom in pps formula");
  }
  return psi;
}

const PBFunction& GadgetTrace::add(const std::string& name, PpsFormula formula, const Registry& base) {
  Registry reg = base;
  for (const auto& s : steps) reg.insert_or_assign(s.name, s.value);
  PBFunction value = eval_pps(formula, reg);
  steps.push_back(TraceStep{name, std::move(formula), std::move(value)});
  return steps.back().value;
}

const PBFunction& GadgetTrace::value(const std::string& name) const {
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->name == name) return it->value;
  }
  throw InputError("no trace step named '" + name + "'");
}

std::string GadgetTrace::to_text() const {
  std::string out;
  for (const auto& s : steps) out += s.name + " = " + spincount::to_text(s.formula) + "\n";
  return out;
}

void verify_trace(const GadgetTrace& trace, const Registry& base) {
  Registry reg = base;
  for (const auto& s : trace.steps) {
    const PBFunction v = eval_pps(s.formula, reg);
    if (!(v == s.value)) throw VerificationError("trace step '" + s.name + "' does not match its formula");
    reg.insert_or_assign(s.name, s.value);
  }
}

}  // namespace spincount

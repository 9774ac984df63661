#include "spincount/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spincount/error.hpp"
#include "spincount/properties.hpp"

namespace spincount {

bool CspInstance::has_variable(const std::string& name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

bool CspInstance::has_function(const std::string& name) const {
  return std::any_of(functions_.begin(), functions_.end(), [&](const NamedTable& f) { return f.name == name; });
}

int CspInstance::variable_index(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw InputError("unknown variable '" + name + "'");
  return static_cast<int>(it - variables_.begin());
}

void CspInstance::add_variable(const std::string& name) {
  if (name.empty()) throw InputError("empty variable name");
  if (!has_variable(name)) variables_.push_back(name);
}

void CspInstance::add_function(const std::string& name, const SignedTable& table) {
  if (name.empty()) throw InputError("empty function name");
  for (const auto& f : functions_) {
    if (f.name == name) {
      if (f.table == table) return;
      throw InputError("function '" + name + "' redefined with a different table");
    }
  }
  functions_.push_back(NamedTable{name, table});
}

void CspInstance::add_constraint(const std::string& function, const std::vector<std::string>& scope) {
  const SignedTable& t = table(function);
  if (static_cast<int>(scope.size()) != t.arity()) {
    throw ArityError("constraint on '" + function + "' has " + std::to_string(scope.size()) +
                     " variables but arity " + std::to_string(t.arity()));
  }
  for (const auto& v : scope) add_variable(v);
  constraints_.push_back(Constraint{function, scope});
}

const SignedTable& CspInstance::table(const std::string& name) const {
  for (const auto& f : functions_) {
    if (f.name == name) return f.table;
  }
  throw InputError("unknown function '" + name + "'");
}

PBFunction CspInstance::as_pb(const std::string& name) const {
  const SignedTable& t = table(name);
  if (!t.is_nonnegative()) throw PreconditionError("function '" + name + "' has negative values");
  return PBFunction(t);
}

bool CspInstance::is_nonnegative() const {
  return std::all_of(functions_.begin(), functions_.end(), [](const NamedTable& f) { return f.table.is_nonnegative(); });
}

std::vector<int> CspInstance::degrees() const {
  std::vector<int> deg(variables_.size(), 0);
  for (const auto& c : constraints_) {
    for (const auto& v : c.scope) ++deg[variable_index(v)];
  }
  return deg;
}

std::string CspInstance::fresh_variable(const std::string& base) const {
  std::string name = base;
  for (int k = 1; has_variable(name); ++k) name = base + "_" + std::to_string(k);
  return name;
}

std::string CspInstance::fresh_function(const std::string& base) const {
  std::string name = base;
  for (int k = 1; has_function(name); ++k) name = base + "_" + std::to_string(k);
  return name;
}

bool operator==(const CspInstance& a, const CspInstance& b) {
  if (a.variables_ != b.variables_ || a.constraints_ != b.constraints_) return false;
  if (a.functions_.size() != b.functions_.size()) return false;
  for (std::size_t i = 0; i < a.functions_.size(); ++i) {
    if (a.functions_[i].name != b.functions_[i].name || !(a.functions_[i].table == b.functions_[i].table)) return false;
  }
  return true;
}

CspInstance parse_instance(std::string_view text) {
  CspInstance inst;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "fun") {
        if (tok.size() < 3) throw InputError("expected 'fun <name> <arity> <values>'");
        int arity = 0;
        try {
          std::size_t pos = 0;
          arity = std::stoi(tok[2], &pos);
          if (pos != tok[2].size()) throw std::invalid_argument("arity");
        } catch (const std::logic_error&) {
          throw InputError("malformed arity '" + tok[2] + "'");
        }
        inst.add_function(tok[1], parse_table(arity, {tok.begin() + 3, tok.end()}));
      } else if (tok[0] == "con") {
        if (tok.size() < 2) throw InputError("expected 'con <name> <vars>'");
        inst.add_constraint(tok[1], {tok.begin() + 2, tok.end()});
      } else if (tok[0] == "var") {
        for (auto it = tok.begin() + 1; it != tok.end(); ++it) inst.add_variable(*it);
      } else {
        throw InputError("unknown directive '" + tok[0] + "'");
      }
    } catch (const CapacityError& e) {
      throw CapacityError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ArityError& e) {
      throw ArityError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const Error& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return inst;
}

std::string serialize(const CspInstance& inst) {
  std::ostringstream out;
  for (const auto& f : inst.functions()) {
    out << "fun " << f.name << ' ' << f.table.arity();
    if (f.table.size()) out << ' ' << table_text(f.table);
    out << '\n';
  }
  std::vector<std::string> first_use;
  for (const auto& c : inst.constraints()) {
    for (const auto& v : c.scope) {
      if (std::find(first_use.begin(), first_use.end(), v) == first_use.end()) first_use.push_back(v);
    }
  }
  if (first_use != inst.variables()) {
    out << "var";
    for (const auto& v : inst.variables()) out << ' ' << v;
    out << '\n';
  }
  for (const auto& c : inst.constraints()) {
    out << "con " << c.function;
    for (const auto& v : c.scope) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

namespace {

struct Compiled {
  std::vector<const SignedTable*> tables;
  std::vector<std::vector<int>> scopes;
};

Compiled compile(const CspInstance& inst) {
  Compiled c;
  for (const auto& con : inst.constraints()) {
    c.tables.push_back(&inst.table(con.function));
    std::vector<int> s;
    for (const auto& v : con.scope) s.push_back(inst.variable_index(v));
    c.scopes.push_back(std::move(s));
  }
  return c;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Depth-first enumeration of one connected component, multiplying each
// constraint in as soon as its last variable is assigned.
class ComponentSum {
 public:
  ComponentSum(const Compiled& c, const std::vector<int>& vars, const std::vector<int>& cons)
      : c_(c), vars_(vars) {
    std::vector<int> pos;
    int max_var = 0;
    for (int v : vars) max_var = std::max(max_var, v);
    pos.assign(max_var + 1, -1);
    for (std::size_t i = 0; i < vars.size(); ++i) pos[vars[i]] = static_cast<int>(i);
    at_.assign(vars.size(), {});
    for (int ci : cons) {
      int last = 0;
      for (int v : c.scopes[ci]) last = std::max(last, pos[v]);
      at_[last].push_back(ci);
    }
    assignment_.assign(max_var + 1, 0);
    partial_.assign(vars.size() + 1, Rational(0));
  }

  Rational run() {
    partial_[0] = 1;
    total_ = 0;
    recurse(0);
    return total_;
  }

 private:
  void recurse(std::size_t depth) {
    if (depth == vars_.size()) {
      total_ += partial_[depth];
      return;
    }
    for (int b = 0; b < 2; ++b) {
      assignment_[vars_[depth]] = b;
      Rational& p = partial_[depth + 1];
      p = partial_[depth];
      for (int ci : at_[depth]) {
        std::uint32_t idx = 0;
        for (int v : c_.scopes[ci]) idx = (idx << 1) | static_cast<std::uint32_t>(assignment_[v]);
        p *= (*c_.tables[ci])[idx];
        if (p == 0) break;
      }
      if (p != 0) recurse(depth + 1);
    }
  }

  const Compiled& c_;
  const std::vector<int>& vars_;
  std::vector<std::vector<int>> at_;
  std::vector<int> assignment_;
  std::vector<Rational> partial_;
  Rational total_;
};

}  // namespace

Rational z_exact(const CspInstance& inst, const Caps& caps) {
  const int n = static_cast<int>(inst.variables().size());
  if (n > caps.z_exact_vars) {
    throw CapacityError("z_exact: " + std::to_string(n) + " variables exceed the brute-force cap of " +
                        std::to_string(caps.z_exact_vars));
  }
  const Compiled c = compile(inst);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  Rational result = 1;
  for (std::size_t ci = 0; ci < c.scopes.size(); ++ci) {
    const auto& s = c.scopes[ci];
    if (s.empty()) {
      result *= (*c.tables[ci])[0];
      continue;
    }
    for (int v : s) parent[find_root(parent, v)] = find_root(parent, s[0]);
  }
  if (result == 0) return result;
  // Breadth-first variable order inside each component keeps constraints completing early.
  std::vector<std::vector<int>> var_cons(n);
  for (std::size_t ci = 0; ci < c.scopes.size(); ++ci) {
    for (int v : c.scopes[ci]) var_cons[v].push_back(static_cast<int>(ci));
  }
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> vars{start};
    std::vector<int> cons;
    std::vector<bool> con_seen(c.scopes.size(), false);
    seen[start] = true;
    for (std::size_t head = 0; head < vars.size(); ++head) {
      for (int ci : var_cons[vars[head]]) {
        if (con_seen[ci]) continue;
        con_seen[ci] = true;
        cons.push_back(ci);
        for (int v : c.scopes[ci]) {
          if (!seen[v]) {
            seen[v] = true;
            vars.push_back(v);
          }
        }
      }
    }
    ComponentSum sum(c, vars, cons);
    result *= sum.run();
    if (result == 0) return result;
  }
  return result;
}

Rational z_product_type(const CspInstance& inst) {
  const int n = static_cast<int>(inst.variables().size());
  std::vector<Rational> w0(n, Rational(1));
  std::vector<Rational> w1(n, Rational(1));
  std::vector<int> parent(n);
  std::vector<int> parity(n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    int p = 0;
    while (parent[x] != x) {
      p ^= parity[x];
      x = parent[x];
    }
    return std::pair<int, int>{x, p};
  };
  Rational constant = 1;
  bool infeasible = false;
  auto relate = [&](int a, int b, int par) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != par) infeasible = true;
      return;
    }
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ par;
  };
  std::vector<std::pair<std::string, ProductFactorization>> cache;
  for (const auto& con : inst.constraints()) {
    const ProductFactorization* p = nullptr;
    for (const auto& [name, fac] : cache) {
      if (name == con.function) p = &fac;
    }
    if (!p) {
      const PBFunction f = inst.as_pb(con.function);
      auto fac = is_product_type(f);
      if (!fac) throw PreconditionError("function '" + con.function + "' is not product type");
      cache.emplace_back(con.function, std::move(*fac));
      p = &cache.back().second;
    }
    if (p->zero) return 0;
    constant *= p->constant;
    std::vector<int> vars;
    for (const auto& v : con.scope) vars.push_back(inst.variable_index(v));
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (p->forced[i] == 0) w1[vars[i]] = 0;
      if (p->forced[i] == 1) w0[vars[i]] = 0;
      if (p->forced[i] == -1) relate(vars[p->representative[p->component[i]]], vars[i], p->parity[i]);
    }
    for (std::size_t comp = 0; comp < p->representative.size(); ++comp) {
      const int v = vars[p->representative[comp]];
      w0[v] *= p->unaries[comp][0];
      w1[v] *= p->unaries[comp][1];
    }
  }
  if (infeasible) return 0;
  // For each root, sum over its two values the product of member weights.
  std::vector<Rational> s0(n, Rational(1));
  std::vector<Rational> s1(n, Rational(1));
  for (int v = 0; v < n; ++v) {
    auto [r, p] = find(v);
    s0[r] *= p ? w1[v] : w0[v];
    s1[r] *= p ? w0[v] : w1[v];
  }
  Rational z = constant;
  for (int v = 0; v < n; ++v) {
    if (find(v).first == v) z *= s0[v] + s1[v];
  }
  return z;
}

bool is_holant(const CspInstance& inst) {
  const auto deg = inst.degrees();
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

HolantInstance as_holant(const CspInstance& inst) {
  const auto deg = inst.degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] != 2) {
      throw PreconditionError("variable '" + inst.variables()[i] + "' occurs " + std::to_string(deg[i]) +
                              " times; a holant instance needs exactly 2");
    }
  }
  return HolantInstance{inst};
}

HolantInstance to_holant(const CspInstance& inst) {
  const auto deg = inst.degrees();
  const int n = static_cast<int>(inst.variables().size());
  // Occurrence slots per variable, in constraint order.
  std::vector<std::vector<std::pair<int, int>>> slots(n);
  for (std::size_t ci = 0; ci < inst.constraints().size(); ++ci) {
    const auto& s = inst.constraints()[ci].scope;
    for (std::size_t j = 0; j < s.size(); ++j) {
      slots[inst.variable_index(s[j])].emplace_back(static_cast<int>(ci), static_cast<int>(j));
    }
  }
  std::vector<Constraint> cons = inst.constraints();
  std::vector<std::string> new_vars;
  std::vector<std::vector<std::string>> junctions;
  CspInstance names = inst;  // tracks used names
  auto fresh = [&](const std::string& base) {
    std::string name = names.fresh_variable(base);
    names.add_variable(name);
    new_vars.push_back(name);
    return name;
  };
  for (int v = 0; v < n; ++v) {
    const std::string& name = inst.variables()[v];
    const int d = deg[v];
    int counter = 0;
    auto next = [&]() { return fresh(name + ".eq." + std::to_string(++counter)); };
    if (d == 2) continue;
    if (d == 0) {
      const std::string t1 = next();
      const std::string t2 = next();
      junctions.push_back({name, t1, t1});
      junctions.push_back({name, t2, t2});
    } else if (d == 1) {
      const std::string t = next();
      junctions.push_back({name, t, t});
    } else {
      std::vector<std::string> a{name};
      for (int i = 1; i < d; ++i) {
        a.push_back(next());
        cons[slots[v][i].first].scope[slots[v][i].second] = a.back();
      }
      std::vector<std::string> c;
      for (int j = 0; j < d - 3; ++j) c.push_back(next());
      if (d == 3) {
        junctions.push_back({a[0], a[1], a[2]});
      } else {
        junctions.push_back({a[0], a[1], c[0]});
        for (int j = 1; j < d - 3; ++j) junctions.push_back({c[j - 1], a[j + 1], c[j]});
        junctions.push_back({c[d - 4], a[d - 2], a[d - 1]});
      }
    }
  }
  CspInstance out;
  for (const auto& f : inst.functions()) out.add_function(f.name, f.table);
  for (const auto& v : inst.variables()) out.add_variable(v);
  for (const auto& v : new_vars) out.add_variable(v);
  for (const auto& c : cons) out.add_constraint(c.function, c.scope);
  if (!junctions.empty()) {
    std::string eq3 = "eq3";
    const PBFunction e = fn::eq3();
    if (out.has_function(eq3) && !(out.table(eq3) == e)) eq3 = out.fresh_function("eq3");
    out.add_function(eq3, e);
    for (const auto& j : junctions) out.add_constraint(eq3, j);
  }
  return as_holant(out);
}

HolantInstance holographic_transform(const HolantInstance& h, const Matrix2& m) {
  const Rational c = m.a * m.a + m.b * m.b;
  if (m.a * m.c + m.b * m.d != 0 || m.c * m.c + m.d * m.d != c || c == 0) {
    throw PreconditionError("holographic_transform needs M M^T = cI with c != 0");
  }
  const Rational M[2][2] = {{m.a, m.b}, {m.c, m.d}};
  const CspInstance& inst = h.instance;
  CspInstance out;
  for (const auto& f : inst.functions()) {
    const int k = f.table.arity();
    std::vector<Rational> v(f.table.values());
    std::vector<Rational> next(v.size());
    for (int i = 0; i < k; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << (k - 1 - i);
      for (std::uint32_t x = 0; x < v.size(); ++x) {
        const int xi = (x & bit) ? 1 : 0;
        next[x] = M[xi][0] * v[x & ~bit] + M[xi][1] * v[x | bit];
      }
      std::swap(v, next);
    }
    out.add_function(f.name, SignedTable(k, std::move(v)));
  }
  for (const auto& v : inst.variables()) out.add_variable(v);
  for (const auto& c2 : inst.constraints()) out.add_constraint(c2.function, c2.scope);
  return HolantInstance{out};
}

Rational near_assignment_total(const HolantInstance& h, const Caps& caps) {
  const CspInstance& inst = h.instance;
  const int n = static_cast<int>(inst.variables().size());
  if (n > caps.near_assignment_vars) {
    throw CapacityError("near_assignment_total: " + std::to_string(n) + " variables exceed the cap of " +
                        std::to_string(caps.near_assignment_vars));
  }
  Caps inner = caps;
  inner.z_exact_vars = std::max(caps.z_exact_vars, n + 2);
  std::string neq = "neq";
  if (inst.has_function(neq) && !(inst.table(neq) == fn::neq())) neq = inst.fresh_function("neq");
  Rational total = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      CspInstance split;
      for (const auto& f : inst.functions()) split.add_function(f.name, f.table);
      split.add_function(neq, fn::neq());
      std::vector<Constraint> cons = inst.constraints();
      std::vector<std::pair<std::string, std::string>> pairs;
      for (int w : {u, v}) {
        const std::string& name = inst.variables()[w];
        CspInstance probe = inst;
        const std::string first = probe.fresh_variable(name + "'");
        probe.add_variable(first);
        const std::string second = probe.fresh_variable(name + "''");
        int seen = 0;
        for (auto& c : cons) {
          for (auto& s : c.scope) {
            if (s == name) s = seen++ == 0 ? first : second;
          }
        }
        pairs.emplace_back(first, second);
      }
      for (const auto& c : cons) split.add_constraint(c.function, c.scope);
      for (const auto& [a, b] : pairs) split.add_constraint(neq, {a, b});
      total += z_exact(split, inner);
    }
  }
  return total;
}

}  // namespace spincount

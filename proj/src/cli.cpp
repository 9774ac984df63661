#include "spincount/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spincount/classify.hpp"
#include "spincount/error.hpp"
#include "spincount/estimator.hpp"
#include "spincount/fourier.hpp"
#include "spincount/gadgets.hpp"

namespace spincount {

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string csv(const SignedTable& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += to_string(t[static_cast<std::uint32_t>(i)]);
  }
  return s;
}

struct Record {
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(const std::string& k, const std::string& v) {
    fields.emplace_back(k, v);
    return *this;
  }
};

class Output {
 public:
  Output(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  void emit(const Record& r) {
    if (machine_) {
      bool first = true;
      for (const auto& [k, v] : r.fields) {
        if (!first) out_ << ' ';
        first = false;
        out_ << k << '=';
        if (v.empty() || v.find_first_of(" \"") != std::string::npos) {
          out_ << '"';
          for (char c : v) {
            if (c == '"' || c == '\\') out_ << '\\';
            out_ << c;
          }
          out_ << '"';
        } else {
          out_ << v;
        }
      }
      out_ << '\n';
      return;
    }
    if (count_++) out_ << '\n';
    for (const auto& [k, v] : r.fields) out_ << k << ": " << v << '\n';
  }

  bool machine() const { return machine_; }
  std::ostream& stream() { return out_; }

 private:
  std::ostream& out_;
  bool machine_;
  int count_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit_trace(Output& out, const GadgetTrace& trace) {
  for (const auto& s : trace.steps) {
    out.emit(Record{}.add("step", s.name).add("value", csv(s.value)).add("formula", to_text(s.formula)));
  }
}

std::vector<PBFunction> parse_all(const std::vector<std::string>& lits) {
  std::vector<PBFunction> fs;
  for (const auto& l : lits) fs.push_back(parse_function_literal(l));
  return fs;
}

void cmd_classify(Output& out, const std::vector<std::string>& lits, const std::string& mode) {
  const auto fs = parse_all(lits);
  std::string m = mode;
  if (m == "auto") m = (fs.size() == 1 && fs[0].arity() == 2) ? "two-spin" : "updown";
  if (m == "two-spin") {
    for (const auto& f : fs) {
      const TwoSpinVerdict v = classify_two_spin(f);
      Record r;
      r.add("function", csv(f)).add("tag", to_string(v.tag));
      if (v.tag == TwoSpinTag::Open) r.add("open_kind", to_string(v.open_kind));
      for (const auto& [k, val] : v.evidence) r.add(k, val);
      out.emit(r);
    }
  } else if (m == "updown") {
    const UpDownVerdict v = classify_with_updown(fs);
    Record r;
    r.add("tag", to_string(v.tag)).add("bis_easy", bool_text(v.bis_easy_flag));
    for (const auto& [k, val] : v.evidence) r.add(k, val);
    out.emit(r);
  } else if (m == "relations") {
    std::vector<SupportRelation> gamma;
    for (const auto& f : fs) gamma.push_back(support(f));
    Record r;
    r.add("tag", to_string(classify_relations(gamma)));
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      r.add("relation" + std::to_string(i + 1), to_string(relation_class(gamma[i])));
    }
    out.emit(r);
  } else {
    throw InputError("unknown classify mode '" + mode + "'");
  }
}

void cmd_props(Output& out, const std::vector<std::string>& lits) {
  for (const auto& f : parse_all(lits)) {
    const PropertyReport p = property_report(f);
    Record r;
    r.add("function", csv(f)).add("arity", std::to_string(f.arity()));
    r.add("permissive", bool_text(p.permissive)).add("lsm", bool_text(p.lsm));
    r.add("log_modular", bool_text(p.log_modular)).add("monotone", bool_text(p.monotone));
    r.add("monotone_on_support", bool_text(p.monotone_on_support));
    r.add("support_join_closed", bool_text(p.support_join_closed));
    r.add("pure", bool_text(p.pure));
    if (p.pure_value) r.add("pure_value", to_string(*p.pure_value));
    r.add("affine_support", bool_text(p.affine_support));
    r.add("in_cP", bool_text(p.in_cP)).add("in_SDP3", bool_text(p.in_SDP3));
    if (p.trivial) {
      r.add("trivial", bool_text(*p.trivial)).add("ferromagnetic", bool_text(*p.ferromagnetic));
      r.add("ising", bool_text(*p.ising)).add("symmetric", bool_text(*p.symmetric));
    }
    r.add("product_type", bool_text(is_product_type(f).has_value()));
    const PinMonotoneResult pm = is_pin_monotone(f);
    r.add("pin_monotone", bool_text(pm.ok));
    r.add("relation_class", to_string(relation_class(support(f))));
    out.emit(r);
  }
}

void cmd_fourier(Output& out, const std::vector<std::string>& lits, bool inverse) {
  for (const auto& lit : lits) {
    const PBFunction f = parse_function_literal(lit);
    const SignedTable t = inverse ? inverse_fourier(f) : fourier(f);
    out.emit(Record{}.add("function", csv(f)).add(inverse ? "inverse" : "fourier", csv(t)));
  }
}

void cmd_gadget(Output& out, const std::string& kind, const std::vector<std::string>& lits, int mode,
                const std::string& up_lit, const std::string& epsilon, const std::string& direction) {
  const auto fs = parse_all(lits);
  auto need = [&](std::size_t n) {
    if (fs.size() != n) throw InputError("gadget " + kind + " needs " + std::to_string(n) + " --fun option(s)");
  };
  if (kind == "updown") {
    need(1);
    const UpDown ud = make_up_down(fs[0]);
    out.emit(Record{}.add("up", csv(ud.up)).add("down", csv(ud.down)));
    emit_trace(out, ud.trace);
  } else if (kind == "symmetrize") {
    need(1);
    std::optional<PBFunction> up;
    if (!up_lit.empty()) up = parse_function_literal(up_lit);
    const Gadget g = symmetrize(fs[0], mode, up);
    out.emit(Record{}.add("result", csv(g.value)));
    emit_trace(out, g.trace);
  } else if (kind == "nonlsm") {
    need(2);
    const Gadget g = extract_nonlsm_binary(fs[0], fs[1]);
    out.emit(Record{}.add("result", csv(g.value)).add("from", g.result));
    emit_trace(out, g.trace);
  } else if (kind == "approx-pin") {
    need(1);
    const ApproxPin p = approx_pin(fs[0], parse_rational(epsilon));
    out.emit(Record{}.add("result", csv(p.value)).add("k", std::to_string(p.k)));
  } else if (kind == "normalize") {
    need(1);
    Direction d;
    if (direction == "up") {
      d = Direction::Up;
    } else if (direction == "down") {
      d = Direction::Down;
    } else {
      throw InputError("--direction must be up or down");
    }
    const NormalizedUnary n = normalize_unary(fs[0], d);
    out.emit(Record{}.add("result", csv(n.value)).add("scale", to_string(n.scale)));
  } else {
    throw InputError("unknown gadget '" + kind + "' (updown, symmetrize, nonlsm, approx-pin, normalize)");
  }
}

void cmd_pinning(Output& out, const std::vector<std::string>& lits) {
  const PinningVerdict v = pinning_analysis(parse_all(lits));
  Record r;
  r.add("tag", to_string(v.tag));
  if (v.up) r.add("up", csv(*v.up)).add("down", csv(*v.down));
  if (v.witness >= 0) r.add("witness", "f" + std::to_string(v.witness + 1));
  out.emit(r);
  emit_trace(out, v.trace);
}

Caps caps_with(int brute_cap) {
  Caps caps = default_caps();
  if (brute_cap >= 0) {
    caps.z_exact_vars = brute_cap;
    caps.near_assignment_vars = brute_cap;
  }
  return caps;
}

void cmd_z_exact(Output& out, const std::string& path, bool product, int brute_cap) {
  const CspInstance inst = parse_instance(read_file(path));
  const Rational z = product ? z_product_type(inst) : z_exact(inst, caps_with(brute_cap));
  if (out.machine()) {
    out.emit(Record{}.add("z", to_string(z)).add("method", product ? "product_type" : "brute_force"));
  } else {
    out.stream() << to_string(z) << '\n';
  }
}

PBFunction single_binary(const CspInstance& inst) {
  std::string name;
  for (const auto& c : inst.constraints()) {
    if (name.empty()) name = c.function;
    if (c.function != name) throw InputError("instance must use a single function");
  }
  if (name.empty()) {
    if (inst.functions().size() != 1) throw InputError("instance has no constraints and no unique function");
    name = inst.functions().front().name;
  }
  const PBFunction f = inst.as_pb(name);
  if (f.arity() != 2) throw InputError("instance function must be binary");
  return f;
}

void cmd_z_estimate(Output& out, const std::string& path, const EstimatorConfig& cfg) {
  const CspInstance inst = parse_instance(read_file(path));
  const EstimateReport rep = estimate_z_fpras_report(single_binary(inst), inst, cfg);
  if (out.machine()) {
    out.emit(Record{}
                 .add("z", to_string(rep.value))
                 .add("exact", bool_text(rep.exact))
                 .add("levels", std::to_string(rep.levels))
                 .add("steps", std::to_string(rep.steps)));
  } else {
    out.stream() << to_string(rep.value) << '\n';
  }
}

void cmd_holant_check(Output& out, const std::string& path, int brute_cap) {
  const CspInstance inst = parse_instance(read_file(path));
  const Caps caps = caps_with(brute_cap);
  const bool holant = is_holant(inst);
  const HolantInstance h = to_holant(inst);
  Record r;
  r.add("holant", bool_text(holant));
  r.add("variables", std::to_string(inst.variables().size()));
  r.add("holant_variables", std::to_string(h.instance.variables().size()));
  r.add("holant_constraints", std::to_string(h.instance.constraints().size()));
  if (static_cast<int>(h.instance.variables().size()) <= caps.z_exact_vars) {
    const Rational z = z_exact(inst, caps);
    const Rational zh = z_exact(h.instance, caps);
    r.add("z", to_string(z)).add("z_holant", to_string(zh)).add("z_preserved", bool_text(z == zh));
    if (static_cast<int>(h.instance.variables().size()) <= caps.near_assignment_vars) {
      r.add("near_assignment_total", to_string(near_assignment_total(h, caps)));
    }
  }
  out.emit(r);
  if (!holant && !out.machine()) out.stream() << "\n" << serialize(h.instance);
}

void cmd_triangle_graph(Output& out, const std::string& path, bool integer) {
  const CspInstance inst = parse_instance(read_file(path));
  HolantInstance h;
  Rational kappa = 1;
  bool direct = is_holant(inst);
  if (direct) {
    try {
      h = as_holant(inst);
      build_triangle_graph(h);
    } catch (const PreconditionError&) {
      direct = false;
    }
  }
  if (!direct) {
    const PBFunction f = single_binary(inst);
    if (!in_cP(f)) throw PreconditionError("instance is neither a suitable holant instance nor over a function with nonnegative Fourier table");
    const FourierForm form = holant_fourier_form(lift_instance(inst));
    h = form.holant;
    kappa = form.kappa / 2;
  }
  WeightedMultigraph g = build_triangle_graph(h);
  Integer d = 1;
  if (integer) {
    Integerized ig = integerize(g);
    g = ig.graph;
    d = ig.d;
  }
  out.stream() << "# scale " << to_string(kappa) << "\n";
  if (integer) out.stream() << "# d " << d.get_str() << "\n";
  out.stream() << g.to_text();
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

PBFunction parse_function_literal(const std::string& text) {
  const auto tok = split_ws(text);
  const std::size_t n = tok.size();
  if (n == 0) throw InputError("empty function literal");
  if ((n & (n - 1)) == 0) {
    int arity = 0;
    while ((std::size_t{1} << arity) < n) ++arity;
    return PBFunction(parse_table(arity, tok));
  }
  int arity = 0;
  try {
    std::size_t pos = 0;
    arity = std::stoi(tok[0], &pos);
    if (pos != tok[0].size()) throw std::invalid_argument("arity");
  } catch (const std::logic_error&) {
    throw InputError("malformed function literal '" + text + "'");
  }
  return PBFunction(parse_table(arity, {tok.begin() + 1, tok.end()}));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and approximate tools for Boolean weighted counting CSPs"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "Emit key=value records")->configurable(false);

  std::vector<std::string> funs;
  std::string mode = "auto";
  auto* classify = app.add_subcommand("classify", "Complexity verdicts");
  classify->add_option("--fun", funs, "Function literal (repeatable)")->required();
  classify->add_option("--mode", mode, "auto, two-spin, updown or relations");

  auto* props = app.add_subcommand("props", "Property report");
  props->add_option("--fun", funs, "Function literal (repeatable)")->required();

  bool inverse = false;
  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier transform");
  fourier_cmd->add_option("--fun", funs, "Function literal (repeatable)")->required();
  fourier_cmd->add_flag("--inverse", inverse, "Inverse transform");

  std::string kind;
  int sym_mode = 1;
  std::string up_lit;
  std::string epsilon = "1/10";
  std::string direction = "up";
  auto* gadget = app.add_subcommand("gadget", "Gadget constructions");
  gadget->add_option("kind", kind, "updown, symmetrize, nonlsm, approx-pin or normalize")->required();
  gadget->add_option("--fun", funs, "Function literal (repeatable)")->required();
  gadget->add_option("--mode", sym_mode, "Symmetrization mode 1, 2 or 3");
  gadget->add_option("--up", up_lit, "Increasing unary for symmetrization mode 3");
  gadget->add_option("--epsilon", epsilon, "Tolerance for approx-pin");
  gadget->add_option("--direction", direction, "up or down for normalize");

  auto* pinning = app.add_subcommand("pinning", "Pinning case analysis");
  pinning->add_option("--fun", funs, "Function literal (repeatable)")->required();

  std::string path;
  bool product = false;
  int brute_cap = -1;
  auto* zexact = app.add_subcommand("z-exact", "Exact partition function");
  zexact->add_option("instance", path, "Instance file")->required();
  zexact->add_flag("--product-type", product, "Use the product-type evaluator");
  zexact->add_option("--cap", brute_cap, "Brute-force variable cap");

  EstimatorConfig cfg;
  std::string est_eps = "1/10";
  std::string est_delta = "1/4";
  auto* zest = app.add_subcommand("z-estimate", "Randomized partition function estimate");
  zest->add_option("instance", path, "Instance file")->required();
  zest->add_option("--epsilon", est_eps, "Target accuracy");
  zest->add_option("--delta", est_delta, "Failure probability budget");
  zest->add_option("--seed", cfg.seed, "Random seed");
  zest->add_option("--exact-cap", cfg.exact_cap, "Largest component counted exactly");
  zest->add_option("--steps-constant", cfg.steps_constant, "Chain length constant");

  auto* hcheck = app.add_subcommand("holant-check", "Holant conversion and checks");
  hcheck->add_option("instance", path, "Instance file")->required();
  hcheck->add_option("--cap", brute_cap, "Brute-force variable cap");

  bool integer = false;
  auto* tgraph = app.add_subcommand("triangle-graph", "Emit the triangle gadget multigraph");
  tgraph->add_option("instance", path, "Instance file")->required();
  tgraph->add_flag("--integerize", integer, "Emit the integerized multigraph");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Output o(out, machine);
  try {
    if (*classify) {
      cmd_classify(o, funs, mode);
    } else if (*props) {
      cmd_props(o, funs);
    } else if (*fourier_cmd) {
      cmd_fourier(o, funs, inverse);
    } else if (*gadget) {
      cmd_gadget(o, kind, funs, sym_mode, up_lit, epsilon, direction);
    } else if (*pinning) {
      cmd_pinning(o, funs);
    } else if (*zexact) {
      cmd_z_exact(o, path, product, brute_cap);
    } else if (*zest) {
      cfg.epsilon = parse_rational(est_eps);
      cfg.delta = parse_rational(est_delta);
      cmd_z_estimate(o, path, cfg);
    } else if (*hcheck) {
      cmd_holant_check(o, path, brute_cap);
    } else if (*tgraph) {
      cmd_triangle_graph(o, path, integer);
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace spincount

#include "spincount/estimator.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "spincount/error.hpp"
#include "spincount/fourier.hpp"

namespace spincount {

void validate(const EstimatorConfig& cfg) {
  if (cfg.epsilon <= 0) throw InputError("epsilon must be positive");
  if (cfg.delta <= 0 || cfg.delta >= 1) throw InputError("delta must lie strictly between 0 and 1");
  if (cfg.exact_cap < 0) throw InputError("exact cap must be nonnegative");
  if (!(cfg.steps_constant > 0)) throw InputError("steps constant must be positive");
  if (cfg.min_steps == 0 || cfg.max_steps < cfg.min_steps) throw InputError("invalid step bounds");
}

namespace {

using Matrix = std::vector<std::vector<Integer>>;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Metropolis chain on perfect and near-perfect matchings; parallel edges are
// distinct, so a matching's weight is the product of its pair multiplicities,
// times lambda when it is near-perfect.
class Chain {
 public:
  Chain(const Matrix& w, std::vector<int> mate, std::uint64_t seed) : n_(static_cast<int>(w.size())), mate_(std::move(mate)) {
    m_.assign(n_, std::vector<double>(n_, 0.0));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i != j && w[i][j] != 0) {
          m_[i][j] = w[i][j].get_d();
          if (i < j) {
            bu_.push_back(i);
            bv_.push_back(j);
          }
        }
      }
    }
    rng_.seed(seed);
    pick_ = std::uniform_int_distribution<std::size_t>(0, bu_.size() - 1);
  }

  void set_lambda(double lambda) { lambda_ = lambda; }
  double lambda() const { return lambda_; }
  bool perfect() const { return perfect_; }
  int mate(int v) const { return mate_[v]; }
  int size() const { return n_; }

  void step() {
    const std::size_t e = pick_(rng_);
    const int u = bu_[e];
    const int v = bv_[e];
    if (perfect_) {
      if (mate_[u] != v) return;
      if (accept(lambda_ / m_[u][v])) {
        mate_[u] = mate_[v] = -1;
        perfect_ = false;
      }
      return;
    }
    const bool fu = mate_[u] == -1;
    const bool fv = mate_[v] == -1;
    if (fu && fv) {
      if (accept(m_[u][v] / lambda_)) {
        mate_[u] = v;
        mate_[v] = u;
        perfect_ = true;
      }
    } else if (fu != fv) {
      const int free = fu ? u : v;
      const int held = fu ? v : u;
      const int old = mate_[held];
      if (accept(m_[u][v] / m_[held][old])) {
        mate_[old] = -1;
        mate_[held] = free;
        mate_[free] = held;
      }
    }
  }

 private:
  bool accept(double ratio) { return ratio >= 1.0 || unit_(rng_) < ratio; }

  int n_;
  std::vector<std::vector<double>> m_;
  std::vector<int> bu_;
  std::vector<int> bv_;
  std::vector<int> mate_;
  bool perfect_ = true;
  double lambda_ = 1.0;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<std::size_t> pick_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

// A perfect matching of the support graph, if one exists.
std::optional<std::vector<int>> initial_perfect_matching(const Matrix& w) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int n = static_cast<int>(w.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (w[i][j] != 0) boost::add_edge(i, j, g);
    }
  }
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  std::vector<int> out(n, -1);
  const auto null = boost::graph_traits<Graph>::null_vertex();
  for (int i = 0; i < n; ++i) {
    if (mate[i] == null) return std::nullopt;
    out[i] = static_cast<int>(mate[i]);
  }
  return out;
}

class Estimator {
 public:
  Estimator(const EstimatorConfig& cfg, EstimateReport& report) : cfg_(cfg), report_(report) {
    log_inv_eps_ = std::max(1.0, std::log(1.0 / cfg.epsilon.get_d()));
    z_ = std::max(2.0, std::sqrt(2.0) * boost::math::erf_inv(1.0 - cfg.delta.get_d()));
  }

  Rational solve(Matrix w) {
    const int n = static_cast<int>(w.size());
    std::vector<bool> alive(n, true);
    Rational factor = 1;
    auto degree = [&](int v, int* a, int* b) {
      int d = 0;
      for (int u = 0; u < n; ++u) {
        if (u != v && alive[u] && w[v][u] != 0) {
          if (d == 0 && a) *a = u;
          if (d == 1 && b) *b = u;
          ++d;
        }
      }
      return d;
    };
    for (;;) {
      int count = 0;
      for (int v = 0; v < n; ++v) count += alive[v] ? 1 : 0;
      if (count == 0) return factor;
      if (count % 2 == 1) return 0;
      bool changed = false;
      for (int v = 0; v < n && !changed; ++v) {
        if (!alive[v]) continue;
        int a = -1;
        int b = -1;
        const int d = degree(v, &a, &b);
        if (d == 0) return 0;
        if (d == 1) {
          factor *= Rational(w[v][a]);
          alive[v] = alive[a] = false;
          changed = true;
        } else if (d == 2 && count > 2) {
          // Contract a - v - b into a single vertex stored at a.
          for (int x = 0; x < n; ++x) {
            if (!alive[x] || x == a || x == b || x == v) continue;
            Integer m = w[v][b] * w[a][x] + w[v][a] * w[b][x];
            w[a][x] = m;
            w[x][a] = m;
          }
          w[a][b] = w[b][a] = 0;
          alive[v] = alive[b] = false;
          changed = true;
        }
      }
      if (changed) continue;

      // Split into connected components.
      std::vector<int> comp(n, -1);
      std::vector<std::vector<int>> comps;
      for (int s = 0; s < n; ++s) {
        if (!alive[s] || comp[s] != -1) continue;
        comps.push_back({s});
        comp[s] = static_cast<int>(comps.size()) - 1;
        for (std::size_t h = 0; h < comps.back().size(); ++h) {
          const int x = comps.back()[h];
          for (int y = 0; y < n; ++y) {
            if (alive[y] && comp[y] == -1 && w[x][y] != 0) {
              comp[y] = comp[s];
              comps.back().push_back(y);
            }
          }
        }
      }
      if (comps.size() > 1) {
        for (auto& c : comps) {
          std::sort(c.begin(), c.end());
          const Rational part = solve(submatrix(w, c));
          if (part == 0) return 0;
          factor *= part;
        }
        return factor;
      }
      std::vector<int> live = comps.front();
      std::sort(live.begin(), live.end());
      Matrix sub = submatrix(w, live);
      if (count <= cfg_.exact_cap && count <= 62) {
        std::vector<std::vector<Rational>> q(count, std::vector<Rational>(count));
        for (int i = 0; i < count; ++i) {
          for (int j = 0; j < count; ++j) q[i][j] = Rational(sub[i][j]);
        }
        return factor * count_matchings_exact(q, 0);
      }
      auto level = sample_level(sub);
      if (!level) return 0;
      factor *= Rational(sub[level->u][level->v]) * level->inverse_p;
      alive[live[level->u]] = alive[live[level->v]] = false;
    }
  }

 private:
  struct Level {
    int u;
    int v;
    Rational inverse_p;
  };

  static Matrix submatrix(const Matrix& w, const std::vector<int>& idx) {
    Matrix s(idx.size(), std::vector<Integer>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = w[idx[i]][idx[j]];
    }
    return s;
  }

  std::uint64_t schedule(int n) const {
    const double nn = static_cast<double>(n);
    const double raw = cfg_.steps_constant * nn * nn * nn * nn * log_inv_eps_;
    const double clamped = std::clamp(raw, static_cast<double>(cfg_.min_steps), static_cast<double>(cfg_.max_steps));
    return static_cast<std::uint64_t>(clamped);
  }

  // Estimates the probability that the most occupied pair lies in a
  // stationary perfect matching, after tuning lambda so that perfect and
  // near-perfect states are roughly balanced.
  std::optional<Level> sample_level(const Matrix& w) {
    auto start = initial_perfect_matching(w);
    if (!start) return std::nullopt;
    report_.exact = false;
    const int n = static_cast<int>(w.size());
    const std::uint64_t seed = mix(cfg_.seed ^ mix(static_cast<std::uint64_t>(report_.levels) + 1));
    ++report_.levels;
    Chain chain(w, std::move(*start), seed);
    std::uint64_t steps = schedule(n);
    const std::uint64_t pilot = std::max<std::uint64_t>(steps / 4, 1000);

    auto run = [&](std::uint64_t k) {
      for (std::uint64_t i = 0; i < k; ++i) chain.step();
      report_.steps += k;
    };
    run(pilot);
    for (int round = 0; round < 8; ++round) {
      std::uint64_t perfect = 0;
      for (std::uint64_t i = 0; i < pilot; ++i) {
        chain.step();
        perfect += chain.perfect() ? 1 : 0;
      }
      report_.steps += pilot;
      const double fp = static_cast<double>(perfect) / static_cast<double>(pilot);
      if (fp >= 0.3 && fp <= 0.7) break;
      chain.set_lambda(chain.lambda() * (static_cast<double>(perfect) + 1.0) /
                       (static_cast<double>(pilot - perfect) + 1.0));
    }

    std::vector<std::vector<std::uint64_t>> occ(n, std::vector<std::uint64_t>(n, 0));
    const std::uint64_t stride = static_cast<std::uint64_t>(std::max(1, n / 2));
    for (std::uint64_t i = 0; i < pilot; ++i) {
      chain.step();
      if (i % stride == 0 && chain.perfect()) {
        for (int x = 0; x < n; ++x) {
          if (x < chain.mate(x)) ++occ[x][chain.mate(x)];
        }
      }
    }
    report_.steps += pilot;
    int bu = -1;
    int bv = -1;
    std::uint64_t best = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (w[x][y] != 0 && (bu == -1 || occ[x][y] > best)) {
          best = occ[x][y];
          bu = x;
          bv = y;
        }
      }
    }

    // Batch means give the standard error of hits/perfect; run until it meets the
    // per-level share of the error budget or max_steps is spent.
    const double levels_left = std::max(1.0, n / 2.0);
    const double target = cfg_.epsilon.get_d() / (z_ * std::sqrt(levels_left));
    const std::uint64_t batch = std::max<std::uint64_t>(steps / 32, 1);
    std::vector<double> batch_perfect;
    std::vector<double> batch_hits;
    std::uint64_t perfect = 0;
    std::uint64_t hits = 0;
    std::uint64_t taken = 0;
    for (;;) {
      std::uint64_t bp = 0;
      std::uint64_t bh = 0;
      for (std::uint64_t i = 0; i < batch; ++i) {
        chain.step();
        if (chain.perfect()) {
          ++bp;
          bh += chain.mate(bu) == bv ? 1 : 0;
        }
      }
      report_.steps += batch;
      taken += batch;
      perfect += bp;
      hits += bh;
      batch_perfect.push_back(static_cast<double>(bp));
      batch_hits.push_back(static_cast<double>(bh));
      if (taken < steps) continue;
      if (hits > 0 && relative_error(batch_perfect, batch_hits) <= target) break;
      if (taken >= cfg_.max_steps && hits > 0) break;
      if (taken >= 64 * cfg_.max_steps) break;
    }
    if (hits > 0) {
      Rational inv(Integer(static_cast<unsigned long>(perfect)), Integer(static_cast<unsigned long>(hits)));
      inv.canonicalize();
      return Level{bu, bv, inv};
    }
    throw VerificationError("matching chain never visited the selected pair");
  }

  // Relative standard error of sum(h) / sum(p) from per-batch totals.
  static double relative_error(const std::vector<double>& p, const std::vector<double>& h) {
    const std::size_t k = p.size();
    if (k < 2) return std::numeric_limits<double>::infinity();
    double sp = 0;
    double sh = 0;
    for (std::size_t i = 0; i < k; ++i) {
      sp += p[i];
      sh += h[i];
    }
    if (sh == 0) return std::numeric_limits<double>::infinity();
    const double r = sh / sp;
    const double mean_h = sh / static_cast<double>(k);
    double ss = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const double d = h[i] - r * p[i];
      ss += d * d;
    }
    const double var_r = ss / (static_cast<double>(k) * static_cast<double>(k - 1)) / (mean_h * mean_h);
    return std::sqrt(var_r);
  }

  const EstimatorConfig& cfg_;
  EstimateReport& report_;
  double log_inv_eps_ = 1.0;
  double z_ = 2.0;
};

Matrix integer_matrix(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  Matrix w(n, std::vector<Integer>(n));
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    if (e.weight.get_den() != 1) throw PreconditionError("estimate_pm needs integer edge weights; integerize first");
    w[e.u][e.v] += e.weight.get_num();
    w[e.v][e.u] += e.weight.get_num();
  }
  return w;
}

}  // namespace

EstimateReport estimate_pm_report(const WeightedMultigraph& g, const EstimatorConfig& cfg) {
  validate(cfg);
  EstimateReport report;
  if (g.vertex_count() % 2 == 1) {
    report.value = 0;
    return report;
  }
  Estimator est(cfg, report);
  report.value = est.solve(integer_matrix(g));
  return report;
}

Rational estimate_pm(const WeightedMultigraph& g, const EstimatorConfig& cfg) {
  return estimate_pm_report(g, cfg).value;
}

EstimateReport estimate_z_fpras_report(const PBFunction& f, const CspInstance& inst, const EstimatorConfig& cfg) {
  validate(cfg);
  if (f.arity() != 2) throw ArityError("estimate_z_fpras needs a binary function");
  if (!in_cP(f)) {
    throw PreconditionError("function has a negative Fourier coefficient; see classify for its complexity");
  }
  for (const auto& c : inst.constraints()) {
    if (!(inst.table(c.function) == f)) {
      throw PreconditionError("constraint function '" + c.function + "' differs from the given function");
    }
  }
  const CspInstance lifted = lift_instance(inst);
  const FourierForm form = holant_fourier_form(lifted);
  EstimateReport report;
  if (form.kappa == 0) {
    report.value = 0;
    return report;
  }
  const WeightedMultigraph g = build_triangle_graph(form.holant);
  const Integerized ig = integerize(g);
  report = estimate_pm_report(ig.graph, cfg);
  Integer dpow;
  mpz_pow_ui(dpow.get_mpz_t(), ig.d.get_mpz_t(), static_cast<unsigned long>(g.vertex_count() / 2));
  report.value = report.value * form.kappa / (2 * Rational(dpow));
  return report;
}

Rational estimate_z_fpras(const PBFunction& f, const CspInstance& inst, const EstimatorConfig& cfg) {
  return estimate_z_fpras_report(f, inst, cfg).value;
}

}  // namespace spincount

#include "cyclicity/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace cyclicity {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, int n, int index) {
  return splitmix64(splitmix64(seed ^ (0x100000001B3ull * static_cast<std::uint64_t>(n))) ^
                    static_cast<std::uint64_t>(index));
}

int common_neighbors(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

struct NgExtras {
  int m_bar = 0;
  bool eee_g = false, eee_gbar = false;
  bool tree_g = false, tree_gbar = false;
};

NordhausGaddumRecord make_ng(const Graph& g, const ResistanceMatrix& omega, double c,
                             const Graph& gbar, const Tolerances& tol, NgExtras* extras) {
  ResistanceMatrix omega_bar = resistance_matrix(gbar);
  double c_bar = global_cyclicity(gbar, omega_bar);
  double n = g.vertex_count();
  NordhausGaddumRecord rec;
  rec.graph = to_edge_list(g);
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  rec.c_g = c;
  rec.c_gbar = c_bar;
  rec.sum = c + c_bar;
  rec.product = c * c_bar;
  rec.sum_lower = n * (n - 1.0) * (n - 4.0) / 8.0;
  rec.sum_upper = n * (n - 1.0) * (n - 4.0) / 4.0;
  rec.product_upper = rec.sum_lower * rec.sum_lower;
  rec.sum_lower_tight = std::abs(rec.sum - rec.sum_lower) <= tol.tightness;
  if (extras) {
    extras->m_bar = gbar.edge_count();
    extras->eee_g = is_electrically_edge_equivalent(g, omega, tol.equality);
    extras->eee_gbar = is_electrically_edge_equivalent(gbar, omega_bar, tol.equality);
    extras->tree_g = is_tree(g);
    extras->tree_gbar = is_tree(gbar);
  }
  return rec;
}

// Per-graph check battery. Violations carry the defect as their slack;
// `tight` lists the bound names whose equality case fired.
struct Battery {
  Battery(const Tolerances& t, bool sweep, bool iff)
      : tol(t), delta_sweep(sweep), enforce_iff(iff) {}

  Tolerances tol;
  bool delta_sweep = true;
  bool enforce_iff = true;

  std::int64_t checks = 0;
  std::vector<std::pair<std::string, double>> violations;
  std::vector<std::string> tight;
  bool degree_tree_tight = false;
  std::optional<PairCountFlag> pair_flag;
  bool ng_applicable = false;
  double ng_sum_ratio = 0;
  std::optional<NordhausGaddumRecord> ng_record;

  void violate(const std::string& name, double slack) { violations.emplace_back(name, slack); }

  void expect(bool ok, const std::string& name, double slack) {
    ++checks;
    if (!ok) violate(name, slack);
  }

  // Bound-holds plus both directions of the equality characterization.
  // `iff` means the tight set is exactly characterized; without it only
  // expected => tight is a theorem. Stars hit degree_bound at 0 = 0, which
  // the run counts separately instead of flagging.
  void bound(const BoundCheck& b, bool iff, bool witness) {
    expect(b.holds, b.name, b.slack);
    ++checks;
    if (b.equality_expected && !b.tight) {
      violate("tight_expected_missing:" + b.name, b.slack);
    } else if (b.tight && !b.equality_expected) {
      if (b.name == "degree_bound" && b.bound == 0.0) {
        degree_tree_tight = true;
      } else if (iff && enforce_iff) {
        violate("tight_unexpected:" + b.name, b.slack);
      }
    }
    if (b.tight && witness) tight.push_back(b.name);
  }

  void run(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    ResistanceMatrix omega = resistance_matrix(g);
    const double c = global_cyclicity(g, omega);
    const bool tree = is_tree(g);
    const bool comp = is_complete(g);

    expect(c >= -tol.equality, "nonnegativity", c);
    expect(tree == (c <= tol.equality), "tree_zero", c);

    double foster_residual = foster_sum(g, omega) - (n - 1);
    expect(std::abs(foster_residual) <= std::max(1e-8, tol.equality), "foster",
           foster_residual);

    {
      double slack = closed_form(Family::Complete, n) - c;
      BoundCheck b;
      b.name = "complete_upper";
      b.kind = BoundKind::Upper;
      b.bound = closed_form(Family::Complete, n);
      b.actual = c;
      b.slack = slack;
      b.holds = slack >= -tol.tightness;
      b.tight = std::abs(slack) <= tol.tightness;
      b.equality_expected = comp;
      bound(b, true, true);
    }
    if (auto parts = bipartition_sizes(g)) {
      double value = closed_form(Family::CompleteBipartite, parts->first, parts->second);
      BoundCheck b;
      b.name = "bipartite_upper";
      b.kind = BoundKind::Upper;
      b.bound = value;
      b.actual = c;
      b.slack = value - c;
      b.holds = b.slack >= -tol.tightness;
      b.tight = std::abs(b.slack) <= tol.tightness;
      b.equality_expected = m == parts->first * parts->second;
      bound(b, true, true);
    }

    bound(degree_bound(g, omega, tol.tightness), true, true);
    if (is_regular(g)) bound(regular_bound(g, omega, tol.tightness), false, true);
    bound(max_degree_bound(g, omega, tol.tightness), false, true);
    auto [maj_lo, maj_hi] = majorization_bounds(g, omega, tol.tightness);
    bound(maj_lo, true, true);
    bound(maj_hi, true, true);
    BoundCheck simple = simple_upper_bound(g, omega, tol.tightness);
    bound(simple, true, true);
    auto [mu_lo, mu_hi] = mu_sandwich(g, omega, tol.tightness);
    bound(mu_lo, true, false);
    bound(mu_hi, true, false);
    expect(std::abs(mu_lo.bound - maj_lo.bound) <= 1e-12 &&
               std::abs(mu_hi.bound - simple.bound) <= 1e-12,
           "scale_consistency",
           std::max(std::abs(mu_lo.bound - maj_lo.bound), std::abs(mu_hi.bound - simple.bound)));

    // Adjacent-pair resistance floor with its equal-degree / shared-neighbor
    // equality condition. A pendant edge is a bridge, so omega is exactly 1
    // and the floor degenerates to (d-1)/(d-1): equality without the
    // equal-degree condition. The characterization proper assumes both
    // degrees are at least 2.
    for (const Edge& e : g.edges()) {
      int du = g.degree(e.u), dv = g.degree(e.v);
      if (du * dv <= 1) continue;
      double floor_val = (du + dv - 2.0) / (static_cast<double>(du) * dv - 1.0);
      double slack = omega(e.u, e.v) - floor_val;
      expect(slack >= -tol.equality, "adjacent_lower_bound", slack);
      bool is_tight = std::abs(slack) <= tol.equality;
      bool condition = std::min(du, dv) == 1 ||
                       (du == dv && common_neighbors(g, e.u, e.v) == du - 1);
      if (enforce_iff) {
        expect(is_tight == condition, "adjacent_lower_bound_equality", slack);
      } else {
        expect(!condition || is_tight, "adjacent_lower_bound_equality", slack);
      }
    }

    if (!cut_edges(g).empty()) {
      double min_slack = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          min_slack = std::min(min_slack, omega(i, j) - 2.0 / n);
      expect(min_slack > tol.equality, "cut_edge_lemma", min_slack);
    }

    if (!comp) {
      int count = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (std::abs(omega(i, j) - 2.0 / n) <= tol.equality) ++count;
      int allowance = (n * n - 5 * n + 8) / 2;
      int sharp = (n * n - 5 * n + 6) / 2;
      expect(count <= allowance, "pair_count_lemma", static_cast<double>(allowance - count));
      if (count > sharp) pair_flag = PairCountFlag{"", count, sharp};
    }

    if (delta_sweep) {
      const bool path_graph = tree && max_degree(g) <= 2;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (g.has_edge(i, j)) continue;
          DeltaReport rep = edge_addition_delta(g, omega, i, j);
          std::vector<std::pair<int, int>> plus;
          plus.reserve(m + 1);
          for (const Edge& e : g.edges()) plus.emplace_back(e.u, e.v);
          plus.emplace_back(i, j);
          Graph g2(n, plus);
          double c2 = global_cyclicity(g2, resistance_matrix(g2));
          expect(std::abs((c2 - c) - rep.delta) <= std::max(1e-9, tol.equality),
                 "delta_identity", (c2 - c) - rep.delta);
          expect(rep.delta - rep.lower > tol.equality, "delta_lower_strict",
                 rep.delta - rep.lower);
          expect(rep.upper - rep.delta >= -tol.equality, "delta_upper", rep.upper - rep.delta);
          bool upper_tight = std::abs(rep.upper - rep.delta) <= tol.tightness;
          bool endpoints = path_graph && g.degree(i) == 1 && g.degree(j) == 1;
          expect(upper_tight == endpoints, "delta_upper_tight_iff", rep.upper - rep.delta);
          expect(c2 - c > tol.equality, "smi", c2 - c);
        }
      }
    }

    if (n >= 5) {
      Graph gbar = complement(g);
      if (is_connected(gbar)) {
        ng_applicable = true;
        NgExtras extras;
        NordhausGaddumRecord rec = make_ng(g, omega, c, gbar, tol, &extras);
        ng_sum_ratio = rec.sum / rec.sum_upper;
        expect(rec.sum - rec.sum_lower >= -tol.tightness, "ng_sum_lower",
               rec.sum - rec.sum_lower);
        expect(rec.sum_upper - rec.sum > -tol.tightness, "ng_sum_upper_strict",
               rec.sum_upper - rec.sum);
        expect(rec.product >= -tol.tightness, "ng_product_lower", rec.product);
        expect(rec.product_upper - rec.product > -tol.tightness, "ng_product_upper_strict",
               rec.product_upper - rec.product);
        bool sum_condition = rec.m == extras.m_bar && extras.eee_g && extras.eee_gbar;
        if (enforce_iff) {
          expect(rec.sum_lower_tight == sum_condition, "ng_sum_lower_tight_iff",
                 rec.sum - rec.sum_lower);
        } else {
          expect(!sum_condition || rec.sum_lower_tight, "ng_sum_lower_tight_iff",
                 rec.sum - rec.sum_lower);
        }
        bool product_tight = std::abs(rec.product) <= tol.tightness;
        expect(product_tight == (extras.tree_g || extras.tree_gbar), "ng_product_tight_iff",
               rec.product);
        if (rec.sum_lower_tight) ng_record = std::move(rec);
      }
    }
  }
};

void apply_battery(CertificationRun& run, const Graph& g, const Tolerances& tol,
                   bool delta_sweep, bool enforce_iff) {
  Battery battery{tol, delta_sweep, enforce_iff};
  battery.run(g);
  ++run.graphs_checked;
  run.checks_performed += battery.checks;

  std::string text;
  auto graph_text = [&]() -> const std::string& {
    if (text.empty()) text = to_edge_list(g);
    return text;
  };
  for (auto& [name, slack] : battery.violations)
    run.violations.push_back({name, graph_text(), slack});
  for (auto& category : battery.tight) run.tight_witnesses[category].push_back(graph_text());
  if (battery.degree_tree_tight) ++run.degree_bound_tree_tight;
  if (battery.pair_flag) {
    battery.pair_flag->graph = graph_text();
    run.pair_count_flags.push_back(*battery.pair_flag);
  }
  if (battery.ng_applicable) {
    ++run.ng_checked;
    run.ng_max_sum_ratio = std::max(run.ng_max_sum_ratio, battery.ng_sum_ratio);
    if (battery.ng_record) run.ng_records.push_back(*battery.ng_record);
  }
}

}  // namespace

NordhausGaddumRecord nordhaus_gaddum(const Graph& g, const Tolerances& tol) {
  if (g.vertex_count() < 5)
    throw Error(ErrorCode::SizeTooSmall, "complement-pair bounds need n >= 5");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  Graph gbar = complement(g);
  if (!is_connected(gbar))
    throw Error(ErrorCode::ComplementDisconnected, "complement is disconnected");
  ResistanceMatrix omega = resistance_matrix(g);
  return make_ng(g, omega, global_cyclicity(g, omega), gbar, tol, nullptr);
}

CertificationRun certify_exhaustive(int n_max, const Tolerances& tol) {
  if (n_max < 3) throw Error(ErrorCode::SizeTooSmall, "exhaustive certification starts at n = 3");
  if (n_max > kMaxExhaustiveVertices)
    throw Error(ErrorCode::SizeTooLarge, "exhaustive certification is capped at n = " +
                                             std::to_string(kMaxExhaustiveVertices));
  CertificationRun run;
  run.mode = "exhaustive";
  run.n_min = 3;
  run.n_max = n_max;
  run.tolerance = tol.equality;
  run.tight_tolerance = tol.tightness;
  for (int n = 3; n <= n_max; ++n)
    for_each_connected(
        n, [&](const Graph& g) { apply_battery(run, g, tol, n <= 6, true); });
  return run;
}

CertificationRun certify_sampled(const std::vector<int>& sizes, int samples_per_n,
                                 double edge_probability, std::uint64_t seed,
                                 const Tolerances& tol) {
  if (sizes.empty()) throw Error(ErrorCode::InvalidParams, "no sizes given");
  for (int n : sizes)
    if (n < 3) throw Error(ErrorCode::SizeTooSmall, "sampled certification needs n >= 3");
  if (samples_per_n < 1) throw Error(ErrorCode::InvalidParams, "need at least one sample per size");
  CertificationRun run;
  run.mode = "sampled";
  run.n_min = *std::min_element(sizes.begin(), sizes.end());
  run.n_max = *std::max_element(sizes.begin(), sizes.end());
  run.sizes = sizes;
  run.samples_per_n = samples_per_n;
  run.edge_probability = edge_probability;
  run.seed = seed;
  run.tolerance = tol.equality;
  run.tight_tolerance = tol.tightness;
  for (int n : sizes)
    for (int k = 0; k < samples_per_n; ++k) {
      Graph g = random_connected(n, edge_probability, sample_seed(seed, n, k));
      apply_battery(run, g, tol, n <= 6, n <= kMaxExhaustiveVertices);
    }
  return run;
}

std::string to_certrun(const CertificationRun& run) {
  nlohmann::ordered_json j;
  j["mode"] = run.mode;
  j["n_min"] = run.n_min;
  j["n_max"] = run.n_max;
  if (run.mode == "sampled") {
    j["sizes"] = run.sizes;
    j["samples_per_n"] = run.samples_per_n;
    j["edge_probability"] = run.edge_probability;
    j["seed"] = run.seed;
  }
  j["tolerance"] = run.tolerance;
  j["tight_tolerance"] = run.tight_tolerance;
  j["graphs_checked"] = run.graphs_checked;
  j["checks_performed"] = run.checks_performed;
  j["ng_checked"] = run.ng_checked;
  j["ng_max_sum_ratio"] = run.ng_max_sum_ratio;
  j["degree_bound_tree_tight"] = run.degree_bound_tree_tight;
  j["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : run.violations)
    j["violations"].push_back({{"check", v.check}, {"graph", v.graph}, {"slack", v.slack}});
  j["tight_witnesses"] = nlohmann::ordered_json::object();
  for (const auto& [category, graphs] : run.tight_witnesses)
    j["tight_witnesses"][category] = graphs;
  j["ng_records"] = nlohmann::ordered_json::array();
  for (const NordhausGaddumRecord& r : run.ng_records)
    j["ng_records"].push_back({{"graph", r.graph},
                               {"n", r.n},
                               {"m", r.m},
                               {"c_g", r.c_g},
                               {"c_gbar", r.c_gbar},
                               {"sum", r.sum},
                               {"product", r.product},
                               {"sum_lower", r.sum_lower},
                               {"sum_upper", r.sum_upper},
                               {"product_upper", r.product_upper},
                               {"sum_lower_tight", r.sum_lower_tight}});
  j["pair_count_flags"] = nlohmann::ordered_json::array();
  for (const PairCountFlag& f : run.pair_count_flags)
    j["pair_count_flags"].push_back({{"graph", f.graph}, {"count", f.count}, {"sharp", f.sharp}});
  return j.dump(2) + "\n";
}

CertificationRun parse_certrun(const std::string& text) {
  try {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    CertificationRun run;
    run.mode = j.at("mode").get<std::string>();
    if (run.mode != "exhaustive" && run.mode != "sampled")
      throw Error(ErrorCode::CorruptRun, "unknown mode '" + run.mode + "'");
    run.n_min = j.at("n_min").get<int>();
    run.n_max = j.at("n_max").get<int>();
    if (run.mode == "sampled") {
      run.sizes = j.at("sizes").get<std::vector<int>>();
      run.samples_per_n = j.at("samples_per_n").get<int>();
      run.edge_probability = j.at("edge_probability").get<double>();
      run.seed = j.at("seed").get<std::uint64_t>();
    }
    run.tolerance = j.at("tolerance").get<double>();
    run.tight_tolerance = j.at("tight_tolerance").get<double>();
    run.graphs_checked = j.at("graphs_checked").get<std::int64_t>();
    run.checks_performed = j.at("checks_performed").get<std::int64_t>();
    run.ng_checked = j.at("ng_checked").get<std::int64_t>();
    run.ng_max_sum_ratio = j.at("ng_max_sum_ratio").get<double>();
    run.degree_bound_tree_tight = j.at("degree_bound_tree_tight").get<std::int64_t>();
    for (const auto& v : j.at("violations"))
      run.violations.push_back({v.at("check").get<std::string>(),
                                v.at("graph").get<std::string>(),
                                v.at("slack").get<double>()});
    for (const auto& [category, graphs] : j.at("tight_witnesses").items())
      run.tight_witnesses[category] = graphs.get<std::vector<std::string>>();
    for (const auto& r : j.at("ng_records")) {
      NordhausGaddumRecord rec;
      rec.graph = r.at("graph").get<std::string>();
      rec.n = r.at("n").get<int>();
      rec.m = r.at("m").get<int>();
      rec.c_g = r.at("c_g").get<double>();
      rec.c_gbar = r.at("c_gbar").get<double>();
      rec.sum = r.at("sum").get<double>();
      rec.product = r.at("product").get<double>();
      rec.sum_lower = r.at("sum_lower").get<double>();
      rec.sum_upper = r.at("sum_upper").get<double>();
      rec.product_upper = r.at("product_upper").get<double>();
      rec.sum_lower_tight = r.at("sum_lower_tight").get<bool>();
      run.ng_records.push_back(std::move(rec));
    }
    for (const auto& f : j.at("pair_count_flags"))
      run.pair_count_flags.push_back({f.at("graph").get<std::string>(),
                                      f.at("count").get<int>(), f.at("sharp").get<int>()});
    return run;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::CorruptRun, e.what());
  }
}

// Labeled connected graph count by the complement-subtraction recurrence;
// independent of the enumerator, so it can audit a stored run's totals.
static std::int64_t connected_count(int n) {
  static std::vector<double> cache{0, 1};  // exact in doubles up to n = 7
  auto choose2 = [](int k) { return k * (k - 1) / 2; };
  for (int k = static_cast<int>(cache.size()); k <= n; ++k) {
    double total = std::pow(2.0, choose2(k));
    double binom = 1;  // binom(k-1, j-1)
    for (int j = 1; j < k; ++j) {
      total -= binom * cache[j] * std::pow(2.0, choose2(k - j));
      binom = binom * (k - j) / j;
    }
    cache.push_back(total);
  }
  return static_cast<std::int64_t>(cache[n]);
}

bool replay(const CertificationRun& run) {
  Tolerances tol{run.tolerance, run.tight_tolerance};
  if (run.mode == "exhaustive") {
    std::int64_t expected = 0;
    for (int n = run.n_min; n <= run.n_max; ++n) expected += connected_count(n);
    if (run.graphs_checked != expected) return false;
  } else {
    std::int64_t expected =
        static_cast<std::int64_t>(run.sizes.size()) * run.samples_per_n;
    if (run.graphs_checked != expected) return false;
  }
  auto battery_for = [&](const Graph& g) {
    Battery battery{tol, g.vertex_count() <= 6, g.vertex_count() <= kMaxExhaustiveVertices};
    battery.run(g);
    return battery;
  };
  auto load = [](const std::string& text) {
    try {
      return parse_edge_list(text);
    } catch (const Error& e) {
      throw Error(ErrorCode::CorruptRun, e.what());
    }
  };
  try {
    for (const Violation& v : run.violations) {
      Battery battery = battery_for(load(v.graph));
      bool matched = false;
      for (auto& [name, slack] : battery.violations)
        if (name == v.check && slack == v.slack) matched = true;
      if (!matched) return false;
    }
    for (const auto& [category, graphs] : run.tight_witnesses)
      for (const std::string& text : graphs) {
        Battery battery = battery_for(load(text));
        if (std::find(battery.tight.begin(), battery.tight.end(), category) ==
            battery.tight.end())
          return false;
      }
    for (const NordhausGaddumRecord& rec : run.ng_records) {
      NordhausGaddumRecord again = nordhaus_gaddum(load(rec.graph), tol);
      if (again.graph != rec.graph || again.n != rec.n || again.m != rec.m ||
          again.c_g != rec.c_g || again.c_gbar != rec.c_gbar || again.sum != rec.sum ||
          again.product != rec.product || again.sum_lower != rec.sum_lower ||
          again.sum_upper != rec.sum_upper || again.product_upper != rec.product_upper ||
          again.sum_lower_tight != rec.sum_lower_tight)
        return false;
    }
    for (const PairCountFlag& flag : run.pair_count_flags) {
      Battery battery = battery_for(load(flag.graph));
      if (!battery.pair_flag || battery.pair_flag->count != flag.count ||
          battery.pair_flag->sharp != flag.sharp)
        return false;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CorruptRun) throw;
    throw Error(ErrorCode::CorruptRun, e.what());
  }
  return true;
}

}  // namespace cyclicity

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dcliff/lie.hpp"
#include "dcliff/suites.hpp"
#include "json.hpp"

using namespace dcliff;
using nlohmann::ordered_json;

namespace {

struct CliConfig {
  std::string suite;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> max_degree;
  std::optional<std::string> spec;
  bool enumerate = false;
  std::string mode = "exhaustive";
  std::size_t sample_size = 64;
  std::uint64_t seed = 0;
  std::string out = "text";
  std::string output;
};

// Exit code 2 with a message.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw CliError("cannot write " + cfg.output);
  f << text;
}

void require_format(const CliConfig& cfg, bool dot_ok) {
  if (cfg.out == "dot" && !dot_ok) throw CliError("--out dot is only available for spinor-orbit");
}

int require_m(const CliConfig& cfg) {
  if (!cfg.m) throw CliError("--m is required");
  if (*cfg.m < 2 || *cfg.m > kMaxDim) throw CliError("--m must be in [2, 7]");
  return *cfg.m;
}

std::optional<IdempotentSpec> parse_spec(const CliConfig& cfg) {
  if (!cfg.spec) return std::nullopt;
  IdempotentSpec s = IdempotentSpec::parse(*cfg.spec);
  if (cfg.m && s.m() != *cfg.m)
    throw CliError("spec has " + std::to_string(s.m()) + " factors but --m is " + std::to_string(*cfg.m));
  return s;
}

ordered_json weight_json(const Weight& w) { return w.entry_strings(); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_verify(const CliConfig& cfg) {
  require_format(cfg, false);
  SuiteParams p;
  p.m = cfg.m;
  p.k = cfg.k;
  p.max_degree = cfg.max_degree;
  p.mode = cfg.mode;
  p.sample_size = cfg.sample_size;
  p.seed = cfg.seed;
  p.spec = parse_spec(cfg);
  const SuiteReport r = run_suite(cfg.suite, p);
  emit(cfg, cfg.out == "json" ? r.to_json() : r.to_text());
  return r.passed() ? 0 : 1;
}

int cmd_weights(const CliConfig& cfg) {
  require_format(cfg, false);
  if (cfg.enumerate == cfg.spec.has_value()) throw CliError("weights needs exactly one of --spec and --enumerate");
  const auto one = parse_spec(cfg);
  const int m = one ? one->m() : require_m(cfg);
  if (m < 2 || m > kMaxDim) throw CliError("--m must be in [2, 7]");
  const int k = cfg.k.value_or(0);
  if (k < 0 || k > 15) throw CliError("--k must be in [0, 15]");
  std::vector<IdempotentSpec> specs = one ? std::vector<IdempotentSpec>{*one} : enumerate_idempotents(m);
  SoRealization so(m);
  Evaluator ev;
  ordered_json results = ordered_json::array();
  std::ostringstream text;
  for (const auto& s : specs) {
    const Poly f = basic_monogenic(s, k);
    std::optional<Weight> w;
    std::string why;
    try {
      w = weight_of(so, ev, f);
    } catch (const NotEigen& e) {
      why = e.what();
    }
    const HwvClass cls = classify_direct(so, ev, s, k);
    ordered_json e;
    e["spec"] = s.to_string();
    e["weight"] = w ? weight_json(*w) : ordered_json(nullptr);
    e["class"] = std::string(class_name(cls));
    results.push_back(std::move(e));
    const std::string ws = w ? w->to_string() : "not a weight vector: " + why;
    if (one)
      text << ws << "\n";
    else
      text << s.to_string() << "  " << ws << "  " << class_name(cls) << "\n";
  }
  if (cfg.out == "json") {
    ordered_json j;
    j["m"] = m;
    j["k"] = k;
    j["results"] = std::move(results);
    emit(cfg, dump(j));
  } else {
    emit(cfg, text.str());
  }
  return 0;
}

int cmd_hwv_count(const CliConfig& cfg) {
  require_format(cfg, false);
  const int m = require_m(cfg);
  if (m > 6) throw CliError("hwv-count supports m <= 6");
  const int k = cfg.k.value_or(0);
  if (k < 0 || k > 15) throw CliError("--k must be in [0, 15]");
  if (cfg.mode != "exhaustive" && cfg.mode != "sample") throw CliError("--mode must be exhaustive or sample");
  const HwvCounts pred = hwv_count(m, k);
  std::vector<std::uint64_t> indices;
  if (cfg.mode == "sample")
    for (auto i : sample_indices(std::size_t{1} << (2 * m), cfg.sample_size, cfg.seed)) indices.push_back(i);
  else
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * m)); ++i) indices.push_back(i);
  HwvCounts pred_sub;
  for (auto i : indices) {
    const HwvClass c = classify_idempotent(IdempotentSpec::from_index(m, i), k, m);
    pred_sub.plus += c == HwvClass::PlusHWV;
    pred_sub.minus += c == HwvClass::MinusHWV;
    ++pred_sub.examined;
  }
  const HwvCounts direct = hwv_count_direct(m, k, indices);
  const bool agree = direct == pred_sub;
  if (cfg.out == "json") {
    ordered_json j;
    j["m"] = m;
    j["k"] = k;
    j["predicate"] = {{"plus", pred.plus}, {"minus", pred.minus}, {"examined", pred.examined}};
    j["direct"] = {{"plus", direct.plus}, {"minus", direct.minus}, {"examined", direct.examined}};
    j["agree"] = agree;
    emit(cfg, dump(j));
  } else {
    std::ostringstream t;
    t << "predicate: plus " << pred.plus << ", minus " << pred.minus << " over " << pred.examined << " specs\n";
    t << "direct:    plus " << direct.plus << ", minus " << direct.minus << " over " << direct.examined << " specs\n";
    t << (agree ? "agree" : "DISAGREE") << "\n";
    emit(cfg, t.str());
  }
  return agree ? 0 : 1;
}

int cmd_orbit(const CliConfig& cfg) {
  require_format(cfg, true);
  auto start = parse_spec(cfg);
  if (!start) start = IdempotentSpec::all(require_m(cfg), FactorTag::Lp);
  if (start->m() < 2) throw CliError("--m must be in [2, 7]");
  const OrbitReport r = spinor_orbit(*start);
  const bool matched = r.basis.size() == r.dimension();
  if (cfg.out == "dot") {
    emit(cfg, orbit_to_dot(r));
  } else if (cfg.out == "json") {
    ordered_json j;
    j["m"] = r.m;
    j["start"] = r.start.to_string();
    j["dimension"] = r.dimension();
    ordered_json basis = ordered_json::array();
    for (std::size_t i = 0; i < r.dimension(); ++i) {
      ordered_json e;
      e["spec"] = matched ? ordered_json(r.basis[i].to_string()) : ordered_json(nullptr);
      e["vector"] = r.vectors[i].to_string();
      e["weight"] = weight_json(r.weights[i]);
      basis.push_back(std::move(e));
    }
    j["basis"] = std::move(basis);
    ordered_json edges = ordered_json::array();
    for (const auto& e : r.edges) {
      ordered_json x;
      x["source"] = e.source.to_string();
      x["a"] = e.a;
      x["b"] = e.b;
      x["target"] = e.target ? ordered_json(e.target->to_string()) : ordered_json("mixed");
      x["scalar"] = e.target ? ordered_json(e.scalar.to_string()) : ordered_json(nullptr);
      edges.push_back(std::move(x));
    }
    j["edges"] = std::move(edges);
    emit(cfg, dump(j));
  } else {
    std::ostringstream t;
    t << "start " << r.start.to_string() << ", dimension " << r.dimension() << "\n";
    for (std::size_t i = 0; i < r.dimension(); ++i)
      t << "  " << (matched ? r.basis[i].to_string() : r.vectors[i].to_string()) << "  " << r.weights[i].to_string()
        << "\n";
    t << "edges " << r.edges.size() << "\n";
    for (const auto& e : r.edges)
      t << "  " << e.source.to_string() << " -(" << e.a << "," << e.b << ")-> "
        << (e.target ? e.target->to_string() + "  x " + e.scalar.to_string() : std::string("mixed")) << "\n";
    emit(cfg, t.str());
  }
  return 0;
}

std::size_t binom(int n, int r) {
  if (r < 0 || n < r) return 0;
  std::size_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
  return out;
}

int cmd_dims(const CliConfig& cfg) {
  require_format(cfg, false);
  const int m = require_m(cfg);
  if (m > 4) throw CliError("dims supports m <= 4");
  if (!cfg.k) throw CliError("--k is required");
  const int k = *cfg.k;
  if (k < 0 || k > 6) throw CliError("--k must be in [0, 6]");
  if ((binom(k + m - 1, k) << (2 * m)) > 60000) throw CliError("degree-k space too large");
  const std::size_t blades = std::size_t{1} << (2 * m);
  const std::size_t expected = blades * binom(k + m - 2, k);
  const std::size_t ker = dirac_kernel_dim(m, k);
  const std::size_t hker = laplace_kernel_dim(m, k);
  const long long read_k = static_cast<long long>(binom(k + m - 1, k)) - static_cast<long long>(binom(k + m - 3, k));
  const long long read_m =
      static_cast<long long>(binom(k + m - 1, m - 1)) - static_cast<long long>(binom(k + m - 3, m - 1));
  if (cfg.out == "json") {
    ordered_json j;
    j["m"] = m;
    j["k"] = k;
    j["kernel_dirac"] = ker;
    j["expected_dirac"] = expected;
    j["kernel_laplace"] = hker;
    j["harmonic_per_blade"] = hker / blades;
    j["binomial_k_reading"] = read_k;
    j["binomial_m_reading"] = read_m;
    emit(cfg, dump(j));
  } else {
    std::ostringstream t;
    t << "dim ker D   = " << ker << " (2^(2m) C(k+m-2,k) = " << expected << ")\n";
    t << "dim ker D^2 = " << hker << " = " << blades << " x " << hker / blades << "\n";
    t << "C(k+m-1,k) - C(k+m-3,k) = " << read_k << ", C(k+m-1,m-1) - C(k+m-3,m-1) = " << read_m << "\n";
    emit(cfg, t.str());
  }
  return ker == expected ? 0 : 1;
}

int cmd_brackets(const CliConfig& cfg) {
  require_format(cfg, false);
  const int m = require_m(cfg);
  if (m > 6) throw CliError("bracket-table supports m <= 6");
  const int D = cfg.max_degree.value_or(1);
  if (D < 0 || D > 3) throw CliError("--max-degree must be in [0, 3]");
  const auto table = bracket_table(m, D);
  bool ok = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream t;
  for (const auto& e : table) {
    ok = ok && e.in_span && e.verified;
    const std::string rhs = e.in_span ? format_terms(e.terms) : "not in the span";
    ordered_json x;
    x["left"] = e.left;
    x["right"] = e.right;
    ordered_json terms = ordered_json::object();
    for (const auto& [name, c] : e.terms) terms[name] = c.to_string();
    x["terms"] = e.in_span ? terms : ordered_json(nullptr);
    x["verified"] = e.verified;
    rows.push_back(std::move(x));
    t << "[" << e.left << ", " << e.right << "] = " << rhs << (e.verified ? "" : "  (UNVERIFIED)") << "\n";
  }
  if (cfg.out == "json") {
    ordered_json j;
    j["m"] = m;
    j["max_degree"] = D;
    j["brackets"] = std::move(rows);
    emit(cfg, dump(j));
  } else {
    emit(cfg, t.str());
  }
  return ok ? 0 : 1;
}

void add_common(CLI::App* sub, CliConfig& cfg, bool dot) {
  sub->add_option("--m", cfg.m, "dimension m");
  sub->add_option("--k", cfg.k, "homogeneity degree k");
  sub->add_option("--out", cfg.out, "output format")
      ->check(dot ? CLI::IsMember({"text", "json", "dot"}) : CLI::IsMember({"text", "json"}));
  sub->add_option("--output", cfg.output, "write output to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Clifford analysis: so(m) realization, weights and spinor orbits"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* verify = app.add_subcommand("verify", "run a verification suite or all of them");
  verify->add_option("suite", cfg.suite, "suite name or all")->required();
  add_common(verify, cfg, false);
  verify->add_option("--max-degree", cfg.max_degree, "degree cap D of the basis sweep");
  verify->add_option("--spec", cfg.spec, "idempotent spec, e.g. \"L+ L- M+ M-\"");
  verify->add_option("--mode", cfg.mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  verify->add_option("--sample-size", cfg.sample_size, "sample size in sample mode");
  verify->add_option("--seed", cfg.seed, "seed for sample mode");

  auto* weights = app.add_subcommand("weights", "H-weights of g_k F");
  add_common(weights, cfg, false);
  weights->add_option("--spec", cfg.spec, "idempotent spec");
  weights->add_flag("--enumerate", cfg.enumerate, "all 4^m specs");

  auto* hwv = app.add_subcommand("hwv-count", "count highest weight vectors g_k F");
  add_common(hwv, cfg, false);
  hwv->add_option("--mode", cfg.mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  hwv->add_option("--sample-size", cfg.sample_size, "sample size in sample mode");
  hwv->add_option("--seed", cfg.seed, "seed for sample mode");

  auto* orbit = app.add_subcommand("spinor-orbit", "span generated from an idempotent by dR(a,b)");
  add_common(orbit, cfg, true);
  orbit->add_option("--start,--spec", cfg.spec, "start idempotent (default all L+)");

  auto* dims = app.add_subcommand("dims", "kernel dimensions of D and D^2 on degree k");
  add_common(dims, cfg, false);

  auto* brackets = app.add_subcommand("bracket-table", "commutators of the Cartan-Weyl basis");
  add_common(brackets, cfg, false);
  brackets->add_option("--max-degree", cfg.max_degree, "degree cap for verifying each expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(cfg);
    if (*weights) return cmd_weights(cfg);
    if (*hwv) return cmd_hwv_count(cfg);
    if (*orbit) return cmd_orbit(cfg);
    if (*dims) return cmd_dims(cfg);
    if (*brackets) return cmd_brackets(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

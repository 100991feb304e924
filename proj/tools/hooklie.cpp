// hooklie: hook multiplicities of higher Lie characters and cyclic descent
// extensions on conjugacy classes.
//
// Exit status: 0 when every assertion passed, 1 on an assertion failure,
// 2 on a usage error or an unusable cache.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hooklie/cache.hpp"
#include "hooklie/cdes.hpp"
#include "hooklie/lie.hpp"
#include "hooklie/report.hpp"
#include "hooklie/series.hpp"
#include "hooklie/verify.hpp"

namespace {

using namespace hooklie;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ojson poly_json(const IntPolynomial& p) {
  ojson j;
  j["coefficients"] = int_table(p.coefficients());
  j["text"] = p.to_string();
  return j;
}

Report cmd_hooks(int r, int s, const RunConfig& cfg) {
  if (r < 1 || s < 1) throw UsageError("hooks: r and s must be positive");
  Report rep;
  rep.command = "hooks";
  rep.parameters = {{"r", r}, {"s", s}, {"guard", cfg.guard}};
  const HookProfile p = hook_profile(r, s);
  rep.results["f"] = int_table(p.f);
  rep.results["e"] = int_table(p.e);
  rep.results["m"] = int_table(p.m);
  if (p.d) {
    rep.results["d"] = int_table(*p.d);
  } else {
    rep.results["no_extension"] = p.obstruction->to_string();
  }
  const IntPolynomial np(p.m);
  ojson npj = poly_json(np);
  if (auto q = divide_exact(np, IntPolynomial{1, 1})) npj["factored"] = "(1 + x)*(" + q->to_string() + ")";
  rep.results["N"] = npj;

  bool nonneg = true;
  for (const auto& v : p.m) nonneg = nonneg && v >= 0;
  rep.check("hooks-nonnegative", "hook multiplicities <psi^{(r^s)}, chi^{(n-k,1^k)}> are non-negative", nonneg);
  const Partition mu = Partition::rectangle(r, s);
  if (mu.centralizer_order() <= cfg.guard) {
    const auto oracle = hook_multiplicities_oracle(mu, cfg.guard);
    rep.check("hooks-oracle", "closed formula for the hook multiplicities agrees with the induced character",
              oracle == p.m);
  } else {
    rep.results["oracle"] = "skipped: centralizer order above guard";
  }
  const bool predicted = !is_squarefree(r);
  rep.check("hooks-extension", "a cyclic extension certificate exists iff r is not square-free",
            p.d.has_value() == predicted);
  return rep;
}

Report cmd_series(int r, const RunConfig& cfg) {
  if (r < 1) throw UsageError("series: r must be positive");
  Report rep;
  rep.command = "series";
  rep.parameters = {{"r", r}, {"s_max", cfg.s_max}};
  const BiSeries e = e_series(r, cfg.s_max);
  ojson coeffs = ojson::array();
  bool agree = true;
  for (int s = 0; s <= cfg.s_max; ++s) {
    coeffs.push_back({{"s", s}, {"poly", poly_json(e.coefficient(s))}});
    if (s > 0) agree = agree && e.coefficient(s) == IntPolynomial(e_coeffs(r, s));
  }
  rep.results["f"] = poly_json(f_polynomial(r));
  rep.results["E"] = coeffs;
  if (auto g = g_quotient(r, cfg.s_max)) {
    rep.results["G"] = poly_json(g->g);
    rep.check("quotient-nonnegative", "(E_r - 1)/(1+x)^2 has non-negative coefficients",
              g->quotient_nonnegative && g->g_nonnegative);
  }
  rep.check("series-product-form", "the product form of E_r agrees with the restricted-partition sum", agree);
  return rep;
}

Report cmd_construct(const std::string& mu_text, const std::optional<std::string>& out) {
  const Partition mu = Partition::parse(mu_text);
  Report rep;
  rep.command = "construct";
  rep.parameters = {{"mu", mu.parts()}};
  const bool predicted = detail::theorem_predicts_extension(mu);
  auto built = construct_extension(mu, kDefaultClassDegreeBound);
  if (auto* fail = std::get_if<ExtensionFailure>(&built)) {
    rep.results["feasible"] = false;
    rep.results["solver"] = fail->solver.to_string();
    if (fail->hook_obstruction) rep.results["reason"] = fail->hook_obstruction->to_string();
    if (fail->escher_note) rep.results["note"] = *fail->escher_note;
    rep.check("classification", "no cyclic extension exists exactly when mu = (r^s) with r square-free",
              !predicted);
    return rep;
  }
  const auto& sol = std::get<CyclicExtensionSolution>(built);
  const AxiomCheck chk = verify_axioms(sol);
  rep.results["feasible"] = true;
  ojson fibers = ojson::array();
  for (const auto& [j, c] : sol.fibers.c)
    if (c != 0) fibers.push_back({{"J", subset_json(j)}, {"count", c}});
  rep.results["fibers"] = fibers;
  rep.results["class_size"] = sol.records.size();
  if (out) {
    std::ofstream file(*out);
    if (!file) throw UsageError("construct: cannot write " + *out);
    file << extension_dump(sol);
    rep.results["dump"] = *out;
  }
  rep.check("extension", "cDes(pi) restricted to [n-1] equals Des(pi)", chk.extension);
  rep.check("equivariance", "cDes(p(pi)) is the cyclic shift of cDes(pi)", chk.equivariance && chk.bijection);
  rep.check("non-escher", "cDes(pi) is never empty and never all of [n]", chk.non_escher);
  rep.check("classification", "a cyclic extension exists exactly when mu is not (r^s) with r square-free",
            predicted);
  return rep;
}

Report cmd_cellini(const std::optional<std::string>& mu_text, const RunConfig& cfg) {
  if (!mu_text) return run_verify("cellini", cfg);
  const Partition mu = Partition::parse(*mu_text);
  Report rep;
  rep.command = "cellini";
  rep.parameters = {{"mu", mu.parts()}};
  std::map<Subset, long long> counts;
  ojson perms = ojson::array();
  for (const auto& pi : conjugacy_class(mu)) {
    auto c = cellini_cdes(pi);
    ++counts[c];
    perms.push_back({{"perm", pi.images()}, {"cdes", subset_json(c)}});
  }
  rep.results["permutations"] = perms;
  ojson tally = ojson::array();
  for (const auto& [j, c] : counts) tally.push_back({{"J", subset_json(j)}, {"count", c}});
  rep.results["fibers"] = tally;
  rep.results["closed"] = cellini_closed(mu, kDefaultClassDegreeBound);
  return rep;
}

Report cmd_witt(const std::vector<std::string>& coeffs, int r) {
  if (coeffs.empty()) throw UsageError("witt: give at least one coefficient");
  std::vector<Int> c;
  for (const auto& t : coeffs) {
    try {
      c.emplace_back(t);
    } catch (const std::exception&) {
      throw UsageError("witt: '" + t + "' is not an integer");
    }
  }
  Report rep;
  rep.command = "witt";
  const IntPolynomial p(c);
  rep.parameters = {{"poly", p.to_string()}, {"r", r}};
  try {
    rep.results["transform"] = poly_json(witt_transform(p, r));
    rep.check("integral", "the Witt transform has integer coefficients", true);
  } catch (const std::domain_error& e) {
    rep.check("integral", "the Witt transform has integer coefficients", false, e.what());
  }
  return rep;
}

std::filesystem::path require_cache_dir(const RunConfig& cfg) {
  auto dir = resolve_cache_dir(cfg.cache_dir);
  if (!dir) throw UsageError(std::string("cache: pass --cache-dir or set ") + kCacheDirEnv);
  return *dir;
}

Report cmd_cache(const std::string& action, int n, const RunConfig& cfg) {
  if (n < 1) throw UsageError("cache: --n must be positive");
  const auto dir = require_cache_dir(cfg);
  Report rep;
  rep.command = "cache " + action;
  rep.parameters = {{"n", n}, {"dir", dir.string()}};
  if (action == "dump") {
    rep.results["path"] = dump_character_table(dir, n).string();
  } else {
    const auto path = character_table_path(dir, n);
    if (!std::filesystem::exists(path)) throw CacheError("no cached table at " + path.string());
    load_character_table(read_json_file(path), n);
    rep.results["path"] = path.string();
    rep.results["entries"] = partitions_of(n).size() * partitions_of(n).size();
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hook multiplicities of higher Lie characters and cyclic descent extensions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  std::string cache_dir;
  app.add_option("--n-max", cfg.n_max, "largest class degree n in scans")->capture_default_str();
  app.add_option("--r-max", cfg.r_max, "largest cycle length r in scans")->capture_default_str();
  app.add_option("--s-max", cfg.s_max, "largest number of cycles s in scans")->capture_default_str();
  app.add_option("--guard", cfg.guard, "largest centralizer to enumerate")->capture_default_str();
  app.add_option("--cache-dir", cache_dir, std::string("character table cache (else $") + kCacheDirEnv + ")");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores")->capture_default_str();

  int r = 0, s = 0, n = 0;
  std::string suite, mu, out, action;
  std::vector<std::string> coeffs;

  auto* hooks = app.add_subcommand("hooks", "f, e, hook multiplicities and d for the class (r^s)");
  hooks->add_option("r", r)->required();
  hooks->add_option("s", s)->required();

  auto* series = app.add_subcommand("series", "coefficients of E_r(x, y) up to y^{s-max}");
  series->add_option("r", r)->required();

  auto* verify = app.add_subcommand("verify", "run a verification scan");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(verify_suites()));

  auto* construct = app.add_subcommand("construct", "build a cyclic descent extension on a class");
  construct->add_option("mu", mu, "cycle type, e.g. 4 or 3,1 or 2^2")->required();
  construct->add_option("--out", out, "write the extension dump here");

  auto* cellini = app.add_subcommand("cellini", "Cellini cyclic descents on one class, or the closure scan");
  cellini->add_option("mu", mu, "cycle type; omit to scan all classes up to --n-max");

  auto* witt = app.add_subcommand("witt", "Witt transform of an integer polynomial");
  witt->add_option("--r", r, "transform order")->required();
  witt->add_option("coefficients", coeffs, "c_0 c_1 ... (constant term first)")->required();

  auto* cache = app.add_subcommand("cache", "dump or load a character table");
  cache->add_option("action", action)->required()->check(CLI::IsMember({"dump", "load"}));
  cache->add_option("--n", n, "degree of the table")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
  cfg.format = format == "csv" ? OutputFormat::kCsv : format == "text" ? OutputFormat::kText : OutputFormat::kJson;

  try {
    cfg.validate();
    Stopwatch clock;
    Report rep;
    if (*hooks) rep = cmd_hooks(r, s, cfg);
    else if (*series) rep = cmd_series(r, cfg);
    else if (*verify) rep = run_verify(suite, cfg);
    else if (*construct) rep = cmd_construct(mu, out.empty() ? std::nullopt : std::optional<std::string>(out));
    else if (*cellini) rep = cmd_cellini(mu.empty() ? std::nullopt : std::optional<std::string>(mu), cfg);
    else if (*witt) rep = cmd_witt(coeffs, r);
    else rep = cmd_cache(action, n, cfg);
    rep.elapsed_ms = clock.elapsed_ms();
    std::cout << rep.render(cfg.format);
    return rep.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const CacheError& e) {
    std::cerr << "cache error: " << e.what() << "\n";
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --guard)\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}

/// \file
/// Verification scans behind `hooklie verify <suite>`.
///
/// Every suite fans its independent tasks out over a small worker pool and
/// merges the results in parameter order, so reports do not depend on
/// scheduling.

#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hooklie/cache.hpp"
#include "hooklie/cdes.hpp"
#include "hooklie/characters.hpp"
#include "hooklie/lie.hpp"
#include "hooklie/report.hpp"

namespace hooklie {

struct RunConfig {
  int n_max = 8;
  int r_max = 40;
  int s_max = 5;
  std::uint64_t guard = kDefaultCentralizerGuard;
  std::optional<std::string> cache_dir;
  OutputFormat format = OutputFormat::kJson;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (n_max < 1 || r_max < 1 || s_max < 1) throw std::invalid_argument("scan bounds must be positive");
    if (guard < 1) throw std::invalid_argument("guard must be at least 1");
  }

  ojson to_json() const {
    return {{"n_max", n_max}, {"r_max", r_max}, {"s_max", s_max}, {"guard", guard}};
  }
};

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `threads` workers; results come
/// back indexed by i. The first exception (by index) is rethrown.
template <class R>
std::vector<R> ordered_map(std::size_t count, const std::function<R(std::size_t)>& fn, unsigned threads) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned hw = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, count));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

inline std::vector<Partition> classes_up_to(int n_max, int n_min = 1) {
  std::vector<Partition> all;
  for (int n = n_min; n <= n_max; ++n)
    for (auto& mu : partitions_of(n)) all.push_back(std::move(mu));
  return all;
}

inline bool theorem_predicts_extension(const Partition& mu) {
  return !(mu.is_rectangular() && is_squarefree(mu.parts().front()));
}

inline void load_cached_tables(const RunConfig& cfg) {
  auto dir = resolve_cache_dir(cfg.cache_dir);
  if (!dir) return;
  for (int n = 1; n <= cfg.n_max; ++n) load_character_table_file(*dir, n);
}

inline std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : "; ") + i;
  return s;
}

}  // namespace detail

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"main-theorem", "squarefree", "unimodality", "gr-fibers",
                                              "kw-identity", "cellini", "affine-fibers"};
  return names;
}

inline Report verify_main_theorem(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify main-theorem";
  rep.parameters = cfg.to_json();
  const auto classes = detail::classes_up_to(cfg.n_max);
  struct Row {
    bool feasible;
    bool hooks_ok;
    std::string reason;
  };
  auto rows = detail::ordered_map<Row>(classes.size(), [&](std::size_t i) {
    const auto dist = des_distribution(classes[i], std::max(cfg.n_max, kDefaultClassDegreeBound));
    auto sol = solve_extension(dist);
    auto d = d_from_hooks(hook_fibers(dist));
    Row row{std::holds_alternative<CyclicFibers>(sol), std::holds_alternative<std::vector<Int>>(d), ""};
    if (!row.feasible) row.reason = std::get<Infeasible>(sol).to_string();
    return row;
  }, cfg.threads);

  ojson list = ojson::array();
  std::vector<std::string> wrong, hook_mismatch;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const bool expected = detail::theorem_predicts_extension(classes[i]);
    ojson entry{{"mu", classes[i].parts()}, {"feasible", rows[i].feasible}, {"expected", expected}};
    if (!rows[i].feasible) entry["reason"] = rows[i].reason;
    if (auto note = escher_note(classes[i])) entry["note"] = *note;
    list.push_back(entry);
    if (rows[i].feasible != expected) wrong.push_back("(" + classes[i].to_string() + ")");
    if (rows[i].feasible != rows[i].hooks_ok) hook_mismatch.push_back("(" + classes[i].to_string() + ")");
  }
  rep.results["classes"] = list;
  rep.check("main-theorem",
            "C_mu carries a cyclic descent extension iff mu is not (r^s) with r square-free",
            wrong.empty(), wrong.empty() ? std::to_string(classes.size()) + " classes" : detail::join(wrong));
  rep.check("hook-criterion",
            "solver feasibility agrees with (1+x) | N(x) and non-negative quotient, read off hook fibers",
            hook_mismatch.empty(), detail::join(hook_mismatch));
  return rep;
}

inline Report verify_squarefree(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify squarefree";
  rep.parameters = cfg.to_json();
  struct Row {
    SquarefreeReport sq;
    std::optional<GQuotient> g;
    std::string error;
  };
  auto rows = detail::ordered_map<Row>(static_cast<std::size_t>(cfg.r_max), [&](std::size_t i) {
    const int r = static_cast<int>(i) + 1;
    Row row;
    try {
      row.sq = squarefree_criterion(r, cfg.s_max);
    } catch (const std::logic_error& e) {
      row.error = e.what();
      row.sq.r = r;
      row.sq.moebius_r = moebius(r);
    }
    if (!is_squarefree(r)) row.g = g_quotient(r, cfg.s_max);
    return row;
  }, cfg.threads);

  ojson list = ojson::array();
  std::vector<std::string> moment_bad, div_bad, neg_bad;
  for (const auto& row : rows) {
    const int r = row.sq.r;
    ojson entry{{"r", r}, {"moebius", row.sq.moebius_r}, {"moment", row.sq.moment.str()}};
    ojson divs = ojson::array();
    const bool expect = !is_squarefree(r);
    if (!row.error.empty()) moment_bad.push_back("r=" + std::to_string(r) + ": " + row.error);
    for (int s = 1; s < static_cast<int>(row.sq.divisible.size()); ++s) {
      bool d = row.sq.divisible[static_cast<std::size_t>(s)];
      divs.push_back(d);
      if (d != expect) div_bad.push_back("r=" + std::to_string(r) + ",s=" + std::to_string(s));
    }
    entry["square_divides"] = divs;
    if (expect) {
      bool ok = row.g && row.g->quotient_nonnegative && row.g->g_nonnegative;
      entry["quotient_nonnegative"] = ok;
      if (!ok) neg_bad.push_back("r=" + std::to_string(r));
    }
    list.push_back(entry);
  }
  rep.results["r"] = list;
  rep.check("first-moment", "sum_j (-1)^{j+1} j f_j equals mu(r)", moment_bad.empty(), detail::join(moment_bad));
  rep.check("square-divisibility",
            "(1+x)^2 divides the y^s coefficient of E_r(x,y) iff r is not square-free",
            div_bad.empty(), detail::join(div_bad));
  rep.check("quotient-nonnegative",
            "for r not square-free, (E_r - 1)/(1+x)^2 and F_r/(1+x)^2 have non-negative coefficients",
            neg_bad.empty(), detail::join(neg_bad));
  return rep;
}

inline Report verify_unimodality(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify unimodality";
  rep.parameters = cfg.to_json();
  std::vector<std::pair<int, int>> grid;
  for (int r = 1; r <= cfg.r_max; ++r)
    for (int s = 1; s <= cfg.s_max; ++s) grid.emplace_back(r, s);
  auto unimodal = detail::ordered_map<char>(grid.size(), [&](std::size_t i) -> char {
    return is_unimodal(m_coeffs(grid[i].first, grid[i].second)) ? 1 : 0;
  }, cfg.threads);

  ojson counterexamples = ojson::array();
  std::vector<std::string> full_cycle_bad, any_bad;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (unimodal[i]) continue;
    auto [r, s] = grid[i];
    counterexamples.push_back({{"r", r}, {"s", s}});
    std::string tag = "r=" + std::to_string(r) + ",s=" + std::to_string(s);
    any_bad.push_back(tag);
    if (s == 1) full_cycle_bad.push_back(tag);
  }
  rep.results["pairs_checked"] = grid.size();
  rep.results["counterexamples"] = counterexamples;
  rep.check("unimodal-full-cycle", "hook multiplicities of the Lie character psi^{(r)} are unimodal",
            full_cycle_bad.empty(), detail::join(full_cycle_bad));
  rep.check("unimodal-scan",
            "hook multiplicities of psi^{(r^s)} are unimodal (conjectured; scanned, not assumed)",
            any_bad.empty(), detail::join(any_bad));
  return rep;
}

inline Report verify_gr_fibers(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify gr-fibers";
  rep.parameters = cfg.to_json();
  detail::load_cached_tables(cfg);
  const auto classes = detail::classes_up_to(cfg.n_max);
  struct Row {
    std::size_t subsets = 0;
    std::vector<std::string> fiber_bad;
    bool hooks_ok = true;
    std::optional<bool> formula_ok;
  };
  auto rows = detail::ordered_map<Row>(classes.size(), [&](std::size_t i) {
    const auto& mu = classes[i];
    const int n = mu.size();
    Row row;
    const auto dist = des_distribution(mu, std::max(cfg.n_max, kDefaultClassDegreeBound));
    const auto mults = schur_multiplicities(mu, cfg.guard);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << (n - 1)); ++b) {
      Subset j(n - 1, b);
      ++row.subsets;
      if (straight_ribbon_fiber(mu, j, mults) != dist(j)) row.fiber_bad.push_back(j.to_string());
    }
    std::vector<Int> hooks;
    for (int k = 0; k < n; ++k) hooks.push_back(mults.at(Partition::hook(n, k)));
    row.hooks_ok = hooks == hook_fibers(dist);
    if (mu.is_rectangular()) row.formula_ok = m_coeffs(mu.parts().front(), mu.length()) == hooks;
    return row;
  }, cfg.threads);

  std::size_t checked = 0;
  std::vector<std::string> fiber_bad, hook_bad, formula_bad;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string tag = "(" + classes[i].to_string() + ")";
    checked += rows[i].subsets;
    for (const auto& j : rows[i].fiber_bad) fiber_bad.push_back(tag + " J=" + j);
    if (!rows[i].hooks_ok) hook_bad.push_back(tag);
    if (rows[i].formula_ok && !*rows[i].formula_ok) formula_bad.push_back(tag);
  }
  rep.results["classes"] = classes.size();
  rep.results["fibers_checked"] = checked;
  rep.check("ribbon-fibers",
            "#{pi in C_mu : Des(pi) = J} = sum_lambda <psi^mu, chi^lambda> #{T in SYT(lambda) : Des(T) = J}",
            fiber_bad.empty(), detail::join(fiber_bad));
  rep.check("hook-fibers", "<psi^mu, chi^{(n-k,1^k)}> = #{pi in C_mu : Des(pi) = [k]}", hook_bad.empty(),
            detail::join(hook_bad));
  rep.check("closed-formula", "m_coeffs(r, s) equals the character oracle on (r^s)", formula_bad.empty(),
            detail::join(formula_bad));
  return rep;
}

/// #{0 < a_1 < ... < a_k <= top : sum a_i = 1 (mod n)} for k = 0..n, by
/// dynamic programming over residues.
inline std::vector<Int> kw_subset_counts(int n, int top) {
  // ways[k][res]
  std::vector<std::vector<Int>> ways(static_cast<std::size_t>(n) + 1,
                                     std::vector<Int>(static_cast<std::size_t>(n), 0));
  ways[0][0] = 1;
  for (int a = 1; a <= top; ++a)
    for (int k = std::min(a, n); k >= 1; --k)
      for (int res = 0; res < n; ++res)
        ways[static_cast<std::size_t>(k)][static_cast<std::size_t>((res + a) % n)] +=
            ways[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(res)];
  std::vector<Int> out;
  for (int k = 0; k <= n; ++k) out.push_back(ways[static_cast<std::size_t>(k)][static_cast<std::size_t>(1 % n)]);
  return out;
}

inline Report verify_kw_identity(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify kw-identity";
  rep.parameters = cfg.to_json();
  std::vector<std::string> lie_bad, f_bad;
  ojson list = ojson::array();
  for (int n = 1; n <= cfg.n_max; ++n) {
    auto below = kw_subset_counts(n, n - 1);
    auto upto = kw_subset_counts(n, n);
    auto m = m_coeffs(n, 1);
    auto f = f_coeffs(n);
    below.resize(m.size());
    if (below != m) lie_bad.push_back("n=" + std::to_string(n));
    if (upto != f) f_bad.push_back("n=" + std::to_string(n));
    list.push_back({{"n", n}, {"m", int_table(m)}, {"f", int_table(f)}});
  }
  rep.results["n"] = list;
  rep.check("lie-hooks-subsets",
            "<psi^{(n)}, chi^{(n-k,1^k)}> = #{0 < a_1 < ... < a_k < n : sum a_i = 1 mod n}",
            lie_bad.empty(), detail::join(lie_bad));
  rep.check("f-subsets", "f_k = #{0 < a_1 < ... < a_k <= n : sum a_i = 1 mod n}", f_bad.empty(),
            detail::join(f_bad));
  return rep;
}

inline Report verify_cellini(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify cellini";
  rep.parameters = cfg.to_json();
  // In S_1 the shift is the identity and every multiset is closed.
  const auto classes = detail::classes_up_to(cfg.n_max, 2);
  auto closed = detail::ordered_map<char>(classes.size(), [&](std::size_t i) -> char {
    return cellini_closed(classes[i], std::max(cfg.n_max, kDefaultClassDegreeBound)) ? 1 : 0;
  }, cfg.threads);
  const std::vector<Partition> known{Partition({2, 1}), Partition({3, 1})};
  ojson found = ojson::array();
  std::vector<std::string> unexpected, rect_bad;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& mu = classes[i];
    const bool is_known = std::find(known.begin(), known.end(), mu) != known.end();
    if (closed[i]) found.push_back(mu.parts());
    if (static_cast<bool>(closed[i]) != is_known) unexpected.push_back("(" + mu.to_string() + ")");
    if (closed[i] && mu.is_rectangular()) rect_bad.push_back("(" + mu.to_string() + ")");
  }
  rep.results["closed_classes"] = found;
  rep.results["classes_scanned"] = classes.size();
  rep.check("cellini-closed-classes",
            "within the scanned range, Cellini's CDes multiset is rotation invariant exactly for the "
            "2-cycles in S_3 and the 3-cycles in S_4",
            unexpected.empty(), detail::join(unexpected));
  rep.check("cellini-rectangular", "Cellini's CDes is never rotation invariant on a class (r^s)",
            rect_bad.empty(), detail::join(rect_bad));
  return rep;
}

inline Report verify_affine_fibers(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify affine-fibers";
  rep.parameters = cfg.to_json();
  detail::load_cached_tables(cfg);
  const auto classes = detail::classes_up_to(cfg.n_max);
  struct Row {
    bool feasible = false;
    std::size_t checked = 0;
    std::vector<std::string> bad;
  };
  auto rows = detail::ordered_map<Row>(classes.size(), [&](std::size_t i) {
    const auto& mu = classes[i];
    Row row;
    auto sol = solve_extension(des_distribution(mu, std::max(cfg.n_max, kDefaultClassDegreeBound)));
    const auto* c = std::get_if<CyclicFibers>(&sol);
    if (!c) return row;
    row.feasible = true;
    const auto mults = schur_multiplicities(mu, cfg.guard);
    const int n = mu.size();
    for (std::uint64_t b = 1; b + 1 < (std::uint64_t{1} << n); ++b) {
      Subset j(n, b);
      ++row.checked;
      if (affine_ribbon_fiber(mu, j, mults) != (*c)(j)) row.bad.push_back(j.to_string());
    }
    return row;
  }, cfg.threads);
  std::size_t feasible = 0, checked = 0;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    feasible += rows[i].feasible;
    checked += rows[i].checked;
    for (const auto& j : rows[i].bad) bad.push_back("(" + classes[i].to_string() + ") J=" + j);
  }
  rep.results["feasible_classes"] = feasible;
  rep.results["fibers_checked"] = checked;
  rep.check("affine-ribbon-fibers",
            "cyclic descent fiber sizes equal <affine ribbon Schur function, ch(psi^mu)>", bad.empty(),
            detail::join(bad));
  return rep;
}

inline Report run_verify(const std::string& suite, const RunConfig& cfg) {
  cfg.validate();
  Stopwatch clock;
  Report rep;
  if (suite == "main-theorem") rep = verify_main_theorem(cfg);
  else if (suite == "squarefree") rep = verify_squarefree(cfg);
  else if (suite == "unimodality") rep = verify_unimodality(cfg);
  else if (suite == "gr-fibers") rep = verify_gr_fibers(cfg);
  else if (suite == "kw-identity") rep = verify_kw_identity(cfg);
  else if (suite == "cellini") rep = verify_cellini(cfg);
  else if (suite == "affine-fibers") rep = verify_affine_fibers(cfg);
  else throw std::invalid_argument("unknown suite '" + suite + "'");
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace hooklie

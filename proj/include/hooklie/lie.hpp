/// \file
/// Closed formulas for the hook constituents of the higher Lie character
/// psi^{(r^s)}.
///
///  * f_j   Moebius-sum quantities, j = 0..r (the coefficients of F_r(x))
///  * e_k   <psi, (sign x trivial) induced from S_k x S_{n-k}>
///  * m_k   <psi, chi^{(n-k,1^k)}>, recovered as alternating partial sums of e
///  * d_k   alternating partial sums of m, certifying a cyclic descent extension
///
/// and the product form E_r(x, y) = prod_j (1 - (-1)^j x^j y)^{(-1)^{j+1} f_j},
/// whose y^s coefficient is sum_k e_k x^k for psi^{(r^s)}.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hooklie/characters.hpp"
#include "hooklie/combinat.hpp"
#include "hooklie/series.hpp"

namespace hooklie {

namespace detail {

// f_j from the divisor sum over d | gcd(r, j).
inline std::vector<Int> f_by_divisor_sum(int r) {
  std::vector<Int> f(static_cast<std::size_t>(r) + 1, 0);
  for (int j = 0; j <= r; ++j) {
    Int acc = 0;
    for (long long d : divisors(std::gcd(r, j))) {
      int mu = moebius(d);
      if (mu == 0) continue;
      long long jd = j / d;
      Int term = binomial(Int(r / d), jd) * mu;
      if ((j + jd) % 2 != 0) term = -term;
      acc += term;
    }
    if (acc % r != 0) throw std::logic_error("f_coeffs: divisor sum not divisible by r");
    f[static_cast<std::size_t>(j)] = acc / r;
  }
  return f;
}

// f_j as coefficients of (1/r) sum_{d | r} mu(d) (1 - (-x)^d)^{r/d}, expanded
// term by term with the binomial theorem.
inline std::vector<Int> f_by_product_form(int r) {
  std::vector<Int> acc(static_cast<std::size_t>(r) + 1, 0);
  for (long long d : divisors(r)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    long long e = r / d;
    // (1 - (-x)^d)^e = sum_k binom(e, k) (-1)^k (-1)^{dk} x^{dk}
    for (long long k = 0; k <= e; ++k) {
      Int c = binomial(Int(e), k) * mu;
      if ((k * (d + 1)) % 2 != 0) c = -c;
      acc[static_cast<std::size_t>(d * k)] += c;
    }
  }
  for (auto& c : acc) {
    if (c % r != 0) throw std::logic_error("f_coeffs: product form not divisible by r");
    c /= r;
  }
  return acc;
}

}  // namespace detail

/// f_0..f_r. Computed twice (divisor sum and expanded product form); a
/// mismatch throws std::logic_error.
inline std::vector<Int> f_coeffs(int r) {
  if (r < 1) throw std::invalid_argument("f_coeffs: r must be positive");
  auto a = detail::f_by_divisor_sum(r);
  auto b = detail::f_by_product_form(r);
  if (a != b) throw std::logic_error("f_coeffs: divisor sum and product form disagree");
  for (const auto& c : a)
    if (c < 0) throw std::logic_error("f_coeffs: negative coefficient");
  return a;
}

/// F_r(x) = sum_j f_j x^j
inline IntPolynomial f_polynomial(int r) { return IntPolynomial(f_coeffs(r)); }

/// e_0..e_{rs} as a sum over gamma in P(i)_r^s of
/// prod_{j : k_j > 0} binom(f_j + (k_j - 1)[j even], k_j).
inline std::vector<Int> e_coeffs(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("e_coeffs: r and s must be positive");
  const auto f = f_coeffs(r);
  const int n = r * s;
  // table[j][k] = binom(f_j + (k - 1)[j even], k) for k = 1..s
  std::vector<std::vector<Int>> table(static_cast<std::size_t>(r) + 1,
                                      std::vector<Int>(static_cast<std::size_t>(s) + 1, 0));
  for (int j = 0; j <= r; ++j)
    for (int k = 1; k <= s; ++k)
      table[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          binomial(f[static_cast<std::size_t>(j)] + (j % 2 == 0 ? k - 1 : 0), k);

  // f_0 = 0 for r > 1, so tuples containing a zero part contribute nothing.
  const bool positive_only = r > 1;
  std::vector<Int> e(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> k(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= n; ++i) {
    Int total = 0;
    for (const auto& gamma : RestrictedPartitions(i, r, s, positive_only)) {
      // gamma is weakly decreasing, so equal parts are adjacent
      Int prod = 1;
      std::size_t l = 0;
      while (l < gamma.gamma.size() && prod != 0) {
        std::size_t run = l;
        while (run < gamma.gamma.size() && gamma.gamma[run] == gamma.gamma[l]) ++run;
        prod *= table[static_cast<std::size_t>(gamma.gamma[l])][run - l];
        l = run;
      }
      total += prod;
    }
    e[static_cast<std::size_t>(i)] = total;
  }
  return e;
}

/// m_k = sum_{i <= k} (-1)^{k-i} e_i for k = 0..rs-1. The sequence must be
/// non-negative and the full alternating sum of e must vanish.
inline std::vector<Int> m_from_e(const std::vector<Int>& e) {
  if (e.empty()) return {};
  std::vector<Int> m;
  Int running = 0;
  for (std::size_t k = 0; k + 1 < e.size(); ++k) {
    running = e[k] - running;
    if (running < 0) throw std::logic_error("m_coeffs: negative hook multiplicity");
    m.push_back(running);
  }
  if (e.back() != running) throw std::logic_error("m_coeffs: e is not divisible by (1 + x)");
  return m;
}

inline std::vector<Int> m_coeffs(int r, int s) { return m_from_e(e_coeffs(r, s)); }

/// N_{r,s}(x) = sum_k m_k x^k
inline IntPolynomial n_polynomial(int r, int s) { return IntPolynomial(m_coeffs(r, s)); }

/// E_r(x, y) truncated at y^{s_max}.
inline BiSeries e_series(int r, int s_max) {
  if (r < 1 || s_max < 1) throw std::invalid_argument("e_series: r and s_max must be positive");
  const auto f = f_coeffs(r);
  BiSeries prod = BiSeries::one(s_max);
  for (int j = 0; j <= r; ++j) {
    const Int& fj = f[static_cast<std::size_t>(j)];
    if (fj == 0) continue;
    if (j % 2 == 1) {
      // (1 + x^j y)^{f_j}
      prod *= BiSeries::binomial_power(BiSeries::monomial(s_max, 1, j, 1), fj);
    } else {
      // (1 - x^j y)^{-f_j}
      prod *= BiSeries::reciprocal_power(BiSeries::monomial(s_max, 1, j, 1), fj);
    }
  }
  return prod;
}

// ---------------------------------------------------------------------------
// Cyclic extension certificate from hook multiplicities

enum class ExtensionObstruction {
  kAlternatingSumNonzero,  // sum_k (-1)^k m_k != 0: (1 + x) does not divide N(x)
  kNegativePartialSum,     // some d_k < 0
};

inline const char* describe(ExtensionObstruction o) {
  switch (o) {
    case ExtensionObstruction::kAlternatingSumNonzero:
      return "alternating sum of hook multiplicities is nonzero ((1+x) does not divide N(x))";
    case ExtensionObstruction::kNegativePartialSum:
      return "a partial alternating sum d_k is negative";
  }
  return "unknown";
}

struct NoExtension {
  ExtensionObstruction reason;
  int index = -1;  // offending k for kNegativePartialSum
  Int value = 0;   // the nonzero alternating sum, or the negative d_k

  std::string to_string() const {
    std::string s = describe(reason);
    if (reason == ExtensionObstruction::kNegativePartialSum) s += " (k=" + std::to_string(index) + ")";
    return s + ", value " + value.str();
  }
};

using DCoefficients = std::variant<std::vector<Int>, NoExtension>;

/// d_k = sum_{i <= k} (-1)^{k-i} m_i for k = 0..n-2, returned only when
/// sum_k m_k x^k = (1 + x) sum_k d_k x^k with every d_k >= 0. The
/// divisibility condition is checked first.
inline DCoefficients d_from_hooks(const std::vector<Int>& m) {
  const std::size_t n = m.size();
  std::vector<Int> d;
  Int running = 0;
  for (std::size_t k = 0; k < n; ++k) {
    running = m[k] - running;
    d.push_back(running);
  }
  // d has n entries; the last one is the full alternating sum up to sign
  if (n == 0 || d.back() != 0)
    return NoExtension{ExtensionObstruction::kAlternatingSumNonzero, -1, n == 0 ? Int(0) : d.back()};
  d.pop_back();
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] < 0) return NoExtension{ExtensionObstruction::kNegativePartialSum, static_cast<int>(k), d[k]};
  return d;
}

/// Hook multiplicities of psi^mu: from m_coeffs for rectangular mu, from the
/// character oracle otherwise. For rectangular mu whose centralizer fits in
/// `guard` both routes run and must agree.
inline std::vector<Int> hook_multiplicities(const Partition& mu,
                                            std::uint64_t guard = kDefaultCentralizerGuard,
                                            bool cross_check = true) {
  if (mu.is_rectangular()) {
    auto m = m_coeffs(mu.parts().front(), mu.length());
    if (cross_check && mu.centralizer_order() <= guard) {
      if (hook_multiplicities_oracle(mu, guard) != m)
        throw std::logic_error("hook_multiplicities: closed formula and oracle disagree on (" +
                               mu.to_string() + ")");
    }
    return m;
  }
  return hook_multiplicities_oracle(mu, guard);
}

inline DCoefficients d_coeffs(const Partition& mu, std::uint64_t guard = kDefaultCentralizerGuard) {
  return d_from_hooks(hook_multiplicities(mu, guard));
}

struct HookProfile {
  int r = 0;
  int s = 0;
  std::vector<Int> f, e, m;
  std::optional<std::vector<Int>> d;  // absent when no cyclic extension exists
  std::optional<NoExtension> obstruction;

  int n() const { return r * s; }
};

inline HookProfile hook_profile(int r, int s) {
  HookProfile p;
  p.r = r;
  p.s = s;
  p.f = f_coeffs(r);
  p.e = e_coeffs(r, s);
  p.m = m_from_e(p.e);
  auto d = d_from_hooks(p.m);
  if (auto* v = std::get_if<std::vector<Int>>(&d)) {
    p.d = *v;
  } else {
    p.obstruction = std::get<NoExtension>(d);
  }
  return p;
}

// ---------------------------------------------------------------------------
// (1 + x)^2 divisibility and the quotient series

struct SquarefreeReport {
  int r = 0;
  Int moment;                    // sum_j (-1)^{j+1} j f_j
  int moebius_r = 0;
  std::vector<bool> divisible;   // index s = 1..s_max (entry 0 unused)
};

/// For each s <= s_max, whether (1 + x)^2 divides the y^s coefficient of
/// E_r. The first moment of f must equal mu(r); a mismatch throws.
inline SquarefreeReport squarefree_criterion(int r, int s_max) {
  SquarefreeReport rep;
  rep.r = r;
  rep.moebius_r = moebius(r);
  const auto f = f_coeffs(r);
  for (int j = 0; j <= r; ++j) {
    Int t = f[static_cast<std::size_t>(j)] * j;
    rep.moment += (j % 2 == 1) ? t : Int(-t);
  }
  if (rep.moment != rep.moebius_r)
    throw std::logic_error("squarefree_criterion: first moment differs from mu(r)");
  const BiSeries e = e_series(r, s_max);
  const IntPolynomial square{1, 2, 1};
  rep.divisible.assign(static_cast<std::size_t>(s_max) + 1, false);
  for (int s = 1; s <= s_max; ++s)
    rep.divisible[static_cast<std::size_t>(s)] = divide_exact(e.coefficient(s), square).has_value();
  return rep;
}

struct GQuotient {
  BiSeries quotient;       // (E_r - 1) / (1 + x)^2
  IntPolynomial g;         // F_r / (1 + x)^2
  bool quotient_nonnegative = true;
  bool g_nonnegative = true;
};

/// nullopt when r is square-free (the division is not exact).
inline std::optional<GQuotient> g_quotient(int r, int s_max) {
  const IntPolynomial square{1, 2, 1};
  auto g = divide_exact(f_polynomial(r), square);
  if (!g) return std::nullopt;
  BiSeries e = e_series(r, s_max);
  e -= BiSeries::one(s_max);
  GQuotient out{BiSeries(s_max), *g, true, true};
  for (int s = 0; s <= s_max; ++s) {
    auto q = divide_exact(e.coefficient(s), square);
    if (!q) return std::nullopt;
    for (const auto& c : q->coefficients())
      if (c < 0) out.quotient_nonnegative = false;
    out.quotient.coefficient(s) = *q;
  }
  for (const auto& c : out.g.coefficients())
    if (c < 0) out.g_nonnegative = false;
  return out;
}

}  // namespace hooklie

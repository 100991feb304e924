/// \file
/// Exact integer polynomials in x and bivariate series in (x, y) truncated in
/// y. There is no rational polynomial type: every division is exact or it is
/// refused.

#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hooklie/combinat.hpp"

namespace hooklie {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) c_.emplace_back(c);
    normalize();
  }
  explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static IntPolynomial constant(const Int& c) { return IntPolynomial(std::vector<Int>{c}); }
  static IntPolynomial monomial(const Int& c, int degree) {
    std::vector<Int> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coefficients() const { return c_; }
  Int operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

  /// Coefficients padded with zeros to exactly `len` entries (truncating if longer).
  std::vector<Int> padded(std::size_t len) const {
    std::vector<Int> v(len, 0);
    for (std::size_t k = 0; k < std::min(len, c_.size()); ++k) v[k] = c_[k];
    return v;
  }

  Int evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// p(x^d)
  IntPolynomial substitute_power(int d) const {
    if (d < 1) throw std::invalid_argument("substitute_power: d must be positive");
    if (c_.empty()) return {};
    std::vector<Int> v(static_cast<std::size_t>(degree() * d) + 1, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) v[k * static_cast<std::size_t>(d)] = c_[k];
    return IntPolynomial(std::move(v));
  }

  /// p(-x)
  IntPolynomial negate_variable() const {
    std::vector<Int> v = c_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return IntPolynomial(std::move(v));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }
  IntPolynomial& operator*=(const Int& s) {
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Int& s) { return a *= s; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= Int(-1); }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(v));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  IntPolynomial pow(unsigned e) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

  /// Divides every coefficient by `d`; nullopt unless all divisions are exact.
  std::optional<IntPolynomial> divide_scalar_exact(const Int& d) const {
    if (d == 0) throw std::domain_error("divide_scalar_exact: division by zero");
    std::vector<Int> v = c_;
    for (auto& c : v) {
      if (c % d != 0) return std::nullopt;
      c /= d;
    }
    return IntPolynomial(std::move(v));
  }

  std::string to_string(char var = 'x') const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const Int& c = c_[k];
      if (c == 0) continue;
      Int mag = c < 0 ? Int(-c) : c;
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (k == 0 || mag != 1) s += mag.str();
      if (k >= 1) {
        if (k == 0 || mag != 1) s += "*";
        s += var;
        if (k >= 2) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

  bool operator==(const IntPolynomial&) const = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

/// Exact quotient p / q, or nullopt when q does not divide p over Z[x].
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
  if (p.is_zero()) return IntPolynomial{};
  if (p.degree() < q.degree()) return std::nullopt;
  std::vector<Int> rem = p.coefficients();
  const auto& qc = q.coefficients();
  const Int& lead = qc.back();
  const int dq = q.degree();
  std::vector<Int> quot(static_cast<std::size_t>(p.degree() - dq) + 1, 0);
  for (int k = p.degree(); k >= dq; --k) {
    const Int& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int t = top / lead;
    quot[static_cast<std::size_t>(k - dq)] = t;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k - dq + j)] -= t * qc[static_cast<std::size_t>(j)];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

/// The r-th Witt transform (1/r) sum_{d | r} mu(d) p(x^d)^{r/d}.
/// Throws std::domain_error if the sum is not divisible by r.
inline IntPolynomial witt_transform(const IntPolynomial& p, int r) {
  if (r < 1) throw std::invalid_argument("witt_transform: r must be positive");
  IntPolynomial sum;
  for (long long d : divisors(r)) {
    int mu = moebius(d);
    if (mu == 0) continue;
    sum += p.substitute_power(static_cast<int>(d)).pow(static_cast<unsigned>(r / d)) * Int(mu);
  }
  auto q = sum.divide_scalar_exact(r);
  if (!q) throw std::domain_error("witt_transform: sum is not divisible by r");
  return *q;
}

/// True iff the sequence is nondecreasing up to some index and nonincreasing
/// after it. The empty and all-zero sequences are unimodal.
template <class T>
bool is_unimodal(std::span<const T> c) {
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

template <class T>
bool is_unimodal(const std::vector<T>& c) {
  return is_unimodal(std::span<const T>(c));
}

// ---------------------------------------------------------------------------

/// sum_{s=0}^{s_max} P_s(x) y^s, truncated above y^{s_max}. The x-degree is
/// never truncated.
class BiSeries {
 public:
  explicit BiSeries(int s_max = 0) : coeffs_(static_cast<std::size_t>(check(s_max)) + 1) {}

  static BiSeries one(int s_max) {
    BiSeries b(s_max);
    b.coeffs_[0] = IntPolynomial::constant(1);
    return b;
  }

  /// c x^i y^s
  static BiSeries monomial(int s_max, const Int& c, int i, int s) {
    BiSeries b(s_max);
    if (s <= s_max) b.coeffs_[static_cast<std::size_t>(s)] = IntPolynomial::monomial(c, i);
    return b;
  }

  int s_max() const { return static_cast<int>(coeffs_.size()) - 1; }
  const IntPolynomial& coefficient(int s) const { return coeffs_.at(static_cast<std::size_t>(s)); }
  IntPolynomial& coefficient(int s) { return coeffs_.at(static_cast<std::size_t>(s)); }
  const std::vector<IntPolynomial>& coefficients() const { return coeffs_; }

  BiSeries& operator+=(const BiSeries& o) {
    require_same(o);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] += o.coeffs_[s];
    return *this;
  }
  BiSeries& operator-=(const BiSeries& o) {
    require_same(o);
    for (std::size_t s = 0; s < coeffs_.size(); ++s) coeffs_[s] -= o.coeffs_[s];
    return *this;
  }
  BiSeries& operator*=(const Int& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
  }
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator-(BiSeries a) { return a *= Int(-1); }

  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    a.require_same(b);
    BiSeries out(a.s_max());
    for (int i = 0; i <= a.s_max(); ++i) {
      if (a.coefficient(i).is_zero()) continue;
      for (int j = 0; i + j <= a.s_max(); ++j)
        out.coefficient(i + j) += a.coefficient(i) * b.coefficient(j);
    }
    return out;
  }
  BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

  /// (1 + t)^e = sum_k binom(e, k) t^k for any integer e (generalized
  /// binomial when e < 0). t must have no y^0 term.
  static BiSeries binomial_power(const BiSeries& t, const Int& e) {
    if (!t.coefficient(0).is_zero())
      throw std::domain_error("binomial_power: series has a nonzero y^0 term");
    BiSeries result = one(t.s_max());
    BiSeries t_pow = one(t.s_max());
    Int coeff = 1;  // binom(e, k)
    for (int k = 1; k <= t.s_max(); ++k) {
      t_pow *= t;
      coeff = coeff * (e - (k - 1)) / k;
      if (coeff == 0) break;
      BiSeries term = t_pow;
      term *= coeff;
      result += term;
    }
    return result;
  }

  /// (1 - t)^{-f}
  static BiSeries reciprocal_power(const BiSeries& t, const Int& f) {
    return binomial_power(-t, -f);
  }

  bool operator==(const BiSeries&) const = default;

 private:
  static int check(int s_max) {
    if (s_max < 0) throw std::invalid_argument("BiSeries: negative truncation");
    return s_max;
  }
  void require_same(const BiSeries& o) const {
    if (o.s_max() != s_max()) throw std::invalid_argument("BiSeries: truncation mismatch");
  }

  std::vector<IntPolynomial> coeffs_;
};

}  // namespace hooklie

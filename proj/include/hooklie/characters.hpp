/// \file
/// Character-theoretic oracle for S_n.
///
/// Irreducible characters come from the Murnaghan-Nakayama rule. Higher Lie
/// characters are computed from their definition as induced characters: the
/// centralizer of a permutation of cycle type mu is enumerated element by
/// element, the linear character omega^mu is summed per conjugacy class in
/// Z[zeta_L] (L the lcm of the parts), and each sum is reduced modulo the L-th
/// cyclotomic polynomial. A non-constant remainder is a hard error.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hooklie/combinat.hpp"
#include "hooklie/series.hpp"

namespace hooklie {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultCentralizerGuard = 10'000'000;

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

/// Process-wide memo of chi^lambda(mu). Readers share, inserts are exclusive
/// and idempotent.
class CharacterMemo {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  std::optional<long long> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    return std::nullopt;
  }

  /// Returns false if a different value is already stored under `key`.
  bool insert(const Key& key, long long value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.emplace(key, value);
    return inserted || it->second == value;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, long long> table_;
};

inline CharacterMemo& character_memo() {
  static CharacterMemo memo;
  return memo;
}

namespace detail {

inline long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  CharacterMemo::Key key{lambda, mu};
  auto& memo = character_memo();
  if (auto hit = memo.find(key)) return *hit;

  // Beta numbers beta_i = lambda_i + (L - 1 - i), strictly decreasing.
  const int L = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (L - 1 - i);
  const int m = mu.front();
  std::vector<int> rest(mu.begin() + 1, mu.end());

  long long value = 0;
  for (int i = 0; i < L; ++i) {
    int b = beta[static_cast<std::size_t>(i)];
    int target = b - m;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // rim hook of length m; its height is the number of beta numbers jumped over
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> nl;
    for (int j = 0; j < L; ++j) {
      int part = nb[static_cast<std::size_t>(j)] - (L - 1 - j);
      if (part > 0) nl.push_back(part);
    }
    long long sub = mn_rec(nl, rest);
    value += (between % 2 == 0) ? sub : -sub;
  }
  memo.insert(key, value);
  return value;
}

}  // namespace detail

/// chi^lambda evaluated on the class of cycle type mu.
inline long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_character: |lambda| != |mu|");
  return detail::mn_rec(lambda.parts(), mu.parts());
}

// ---------------------------------------------------------------------------
// Class functions

/// Exact rational-valued function on the conjugacy classes of S_n.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(int n) : n_(n) {
    for (const auto& mu : partitions_of(n)) values_.emplace(mu, Rational(0));
  }

  static ClassFunction irreducible(const Partition& lambda) {
    ClassFunction f(lambda.size());
    for (auto& [mu, v] : f.values_) v = Rational(mn_character(lambda, mu));
    return f;
  }

  int degree() const { return n_; }
  const Rational& operator()(const Partition& mu) const { return values_.at(mu); }
  Rational& operator[](const Partition& mu) { return values_.at(mu); }
  const std::map<Partition, Rational>& values() const { return values_; }

  ClassFunction& operator+=(const ClassFunction& o) {
    if (o.n_ != n_) throw std::invalid_argument("ClassFunction: degree mismatch");
    for (auto& [mu, v] : values_) v += o(mu);
    return *this;
  }

  bool operator==(const ClassFunction&) const = default;

 private:
  int n_ = 0;
  std::map<Partition, Rational> values_;
};

/// (1/n!) sum_mu |class mu| f(mu) g(mu). Characters of S_n are real, so no
/// conjugation is needed.
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("inner_product: degree mismatch");
  Rational acc = 0;
  for (const auto& [mu, v] : f.values()) {
    if (v == 0) continue;
    acc += Rational(mu.class_size()) * v * g(mu);
  }
  return acc / Rational(factorial(f.degree()));
}

// ---------------------------------------------------------------------------
// Centralizer enumeration

/// exp(2 pi i * exponent / order)
struct RootOfUnity {
  long long exponent = 0;
  long long order = 1;
};

/// An element of the centralizer of the base permutation of cycle type mu,
/// together with the value of omega^mu on it.
struct CentralizerElement {
  Partition mu;
  Permutation element;
  RootOfUnity omega;
};

namespace detail {

struct CycleBlockGroup {
  int length = 0;        // i
  int copies = 0;        // k_i
  int first_point = 0;   // 0-based start of the first block
};

inline std::vector<CycleBlockGroup> block_groups(const Partition& mu) {
  std::vector<CycleBlockGroup> groups;
  int point = 0;
  for (std::size_t idx = 0; idx < mu.parts().size();) {
    int len = mu.parts()[idx];
    int k = mu.multiplicity(len);
    groups.push_back({len, k, point});
    point += len * k;
    idx += static_cast<std::size_t>(k);
  }
  return groups;
}

inline long long lcm_of_parts(const Partition& mu) {
  long long l = 1;
  for (int p : mu.parts()) l = std::lcm(l, static_cast<long long>(p));
  return l;
}

/// Calls fn(images, omega_exponent) for every centralizer element, where
/// images is 0-based one-line notation and the value of omega is
/// zeta_L^{omega_exponent}.
///
/// The base permutation cycles each block (start, start+1, ..., start+i-1).
/// Inside the group of blocks of length i, the element with block permutation
/// sigma in S_k and rotations z in Z_i^k sends offset t of block b to offset
/// t + z_b of block sigma(b); omega_i takes the value zeta_i^{z_1 + ... + z_k}.
inline void enumerate_centralizer(const Partition& mu,
                                  const std::function<void(std::span<const int>, long long)>& fn) {
  const auto groups = block_groups(mu);
  const long long L = lcm_of_parts(mu);
  std::vector<int> images(static_cast<std::size_t>(mu.size()));

  auto rec = [&](auto& self, std::size_t gi, long long exponent) -> void {
    if (gi == groups.size()) {
      fn(images, exponent % L);
      return;
    }
    const auto& g = groups[gi];
    const long long weight = L / g.length;
    std::vector<int> sigma(static_cast<std::size_t>(g.copies));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      std::vector<int> z(static_cast<std::size_t>(g.copies), 0);
      while (true) {
        long long zsum = 0;
        for (int b = 0; b < g.copies; ++b) {
          int src = g.first_point + b * g.length;
          int dst = g.first_point + sigma[static_cast<std::size_t>(b)] * g.length;
          int shift = z[static_cast<std::size_t>(b)];
          zsum += shift;
          for (int t = 0; t < g.length; ++t)
            images[static_cast<std::size_t>(src + t)] = dst + (t + shift) % g.length;
        }
        self(self, gi + 1, exponent + weight * (zsum % g.length));
        int pos = 0;
        while (pos < g.copies && ++z[static_cast<std::size_t>(pos)] == g.length) z[static_cast<std::size_t>(pos++)] = 0;
        if (pos == g.copies) break;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  };
  rec(rec, 0, 0);
}

inline Partition cycle_type_of(std::span<const int> images, std::vector<char>& seen) {
  const std::size_t n = images.size();
  seen.assign(n, 0);
  std::vector<int> lens;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images[j])) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(std::move(lens));
}

/// The L-th cyclotomic polynomial, from x^L - 1 = prod_{d | L} Phi_d.
inline IntPolynomial cyclotomic(long long L) {
  IntPolynomial p = IntPolynomial::monomial(1, static_cast<int>(L)) - IntPolynomial::constant(1);
  for (long long d : divisors(L)) {
    if (d == L) continue;
    auto q = divide_exact(p, cyclotomic(d));
    if (!q) throw std::logic_error("cyclotomic: inexact division");
    p = *q;
  }
  return p;
}

/// Remainder of p modulo a monic polynomial.
inline IntPolynomial mod_monic(const IntPolynomial& p, const IntPolynomial& monic) {
  std::vector<Int> rem = p.coefficients();
  const auto& m = monic.coefficients();
  const int dm = monic.degree();
  for (int k = static_cast<int>(rem.size()) - 1; k >= dm; --k) {
    Int t = rem[static_cast<std::size_t>(k)];
    if (t == 0) continue;
    for (int j = 0; j <= dm; ++j) rem[static_cast<std::size_t>(k - dm + j)] -= t * m[static_cast<std::size_t>(j)];
  }
  return IntPolynomial(std::move(rem));
}

}  // namespace detail

inline void for_each_centralizer_element(const Partition& mu,
                                         const std::function<void(const CentralizerElement&)>& fn) {
  const long long L = detail::lcm_of_parts(mu);
  detail::enumerate_centralizer(mu, [&](std::span<const int> images, long long e) {
    std::vector<int> one_line(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) one_line[i] = images[i] + 1;
    fn(CentralizerElement{mu, Permutation(std::move(one_line)), RootOfUnity{e, L}});
  });
}

/// The permutation whose centralizer is enumerated: each block of consecutive
/// points forms one cycle, blocks ordered by decreasing length.
inline Permutation centralizer_base(const Partition& mu) {
  std::vector<int> img(static_cast<std::size_t>(mu.size()));
  int point = 0;
  for (int len : mu.parts()) {
    for (int t = 0; t < len; ++t) img[static_cast<std::size_t>(point + t)] = point + (t + 1) % len + 1;
    point += len;
  }
  return Permutation(std::move(img));
}

/// Values of the higher Lie character psi^mu on every class of S_n.
inline ClassFunction higher_lie_values(const Partition& mu,
                                       std::uint64_t guard = kDefaultCentralizerGuard) {
  const int n = mu.size();
  if (n < 1) throw std::invalid_argument("higher_lie_values: need n >= 1");
  const Int order = mu.centralizer_order();
  if (order > guard)
    throw GuardExceeded("higher_lie_values: centralizer of (" + mu.to_string() + ") has " +
                        order.str() + " elements, above the guard " + std::to_string(guard));
  const long long L = detail::lcm_of_parts(mu);

  std::map<Partition, std::vector<long long>> sums;  // class -> coefficients of zeta_L^e
  std::vector<char> seen;
  detail::enumerate_centralizer(mu, [&](std::span<const int> images, long long e) {
    auto& row = sums[detail::cycle_type_of(images, seen)];
    if (row.empty()) row.assign(static_cast<std::size_t>(L), 0);
    ++row[static_cast<std::size_t>(e)];
  });

  const IntPolynomial phi = detail::cyclotomic(L);
  ClassFunction psi(n);
  for (const auto& [cls, row] : sums) {
    std::vector<Int> coeffs(row.begin(), row.end());
    IntPolynomial reduced = detail::mod_monic(IntPolynomial(std::move(coeffs)), phi);
    if (reduced.degree() > 0)
      throw std::logic_error("higher_lie_values: class sum for (" + cls.to_string() +
                             ") is not rational");
    Int numerator = reduced[0] * cls.centralizer_order();
    if (numerator % order != 0)
      throw std::logic_error("higher_lie_values: non-integral value on (" + cls.to_string() + ")");
    psi[cls] = Rational(numerator / order);
  }
  return psi;
}

namespace detail {

inline Int require_integer(const Rational& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw std::logic_error(std::string(what) + ": non-integral multiplicity " + q.str());
  return boost::multiprecision::numerator(q);
}

}  // namespace detail

/// m_k = <psi^mu, chi^{(n-k,1^k)}> for k = 0..n-1.
inline std::vector<Int> hook_multiplicities_oracle(const Partition& mu,
                                                   std::uint64_t guard = kDefaultCentralizerGuard) {
  const ClassFunction psi = higher_lie_values(mu, guard);
  std::vector<Int> m;
  for (int k = 0; k < mu.size(); ++k) {
    Int v = detail::require_integer(
        inner_product(psi, ClassFunction::irreducible(Partition::hook(mu.size(), k))),
        "hook_multiplicities_oracle");
    if (v < 0) throw std::logic_error("hook_multiplicities_oracle: negative multiplicity");
    m.push_back(v);
  }
  return m;
}

/// <psi^mu, chi^lambda> for every lambda |- n.
inline std::map<Partition, Int> schur_multiplicities(const Partition& mu,
                                                     std::uint64_t guard = kDefaultCentralizerGuard) {
  const ClassFunction psi = higher_lie_values(mu, guard);
  std::map<Partition, Int> out;
  for (const auto& lambda : partitions_of(mu.size()))
    out.emplace(lambda, detail::require_integer(inner_product(psi, ClassFunction::irreducible(lambda)),
                                                "schur_multiplicities"));
  return out;
}

}  // namespace hooklie

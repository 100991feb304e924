// Brute-force reference computations. Deliberately naive and independent of
// the library code paths they check.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Poly product(std::initializer_list<Poly> factors) {
  Poly acc{1};
  for (const auto& f : factors) acc = mul(acc, f);
  return acc;
}

/// Every permutation of [n] in one-line notation (values 1..n).
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> cycle_type(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> lens;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

inline std::vector<int> descents(const std::vector<int>& p) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

/// Semistandard fillings of shape lambda with content beta, cell by cell.
inline long long kostka(const std::vector<int>& lambda, const std::vector<int>& beta) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(static_cast<std::size_t>(lambda[r]), 0);
  std::vector<int> left = beta;
  long long count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    for (int v = 1; v <= static_cast<int>(beta.size()); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v) continue;
      if (r > 0 && t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v) continue;
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      --left[static_cast<std::size_t>(v - 1)];
      fill(idx + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0);
  return count;
}

/// All weakly decreasing s-tuples over [0, r] summing to i, in lexicographic order.
inline std::vector<std::vector<int>> box_tuples(int i, int r, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(s), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == s) {
      if (std::accumulate(cur.begin(), cur.end(), 0) == i) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= r; ++v) {
      if (pos > 0 && v > cur[static_cast<std::size_t>(pos - 1)]) continue;
      cur[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// f^lambda by the hook length formula.
inline long long hook_length_count(const std::vector<int>& lambda) {
  int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<int> conj(lambda.empty() ? 0 : static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda)
    for (int c = 0; c < part; ++c) ++conj[static_cast<std::size_t>(c)];
  long double num = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  long double den = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c)
      den *= (lambda[r] - c - 1) + (conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1) + 1;
  return static_cast<long long>(num / den + 0.5L);
}

/// #{0 < a_1 < ... < a_k <= top : sum = 1 mod n}, by subset enumeration.
inline std::vector<long long> residue_subsets(int n, int top) {
  std::vector<long long> out(static_cast<std::size_t>(n) + 1, 0);
  for (unsigned mask = 0; mask < (1U << top); ++mask) {
    int sum = 0;
    for (int a = 1; a <= top; ++a)
      if (mask & (1U << (a - 1))) sum += a;
    if (sum % n == 1 % n) ++out[static_cast<std::size_t>(__builtin_popcount(mask))];
  }
  return out;
}

}  // namespace oracle

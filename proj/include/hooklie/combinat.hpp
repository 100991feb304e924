/// \file
/// Enumerative building blocks: partitions, restricted partitions,
/// permutations grouped by cycle type, subsets of [n] with the cyclic shift,
/// standard Young tableaux and Kostka numbers.
///
/// Subsets of [n] are n-bit masks, bit i-1 standing for the element i.
/// Permutations use one-line notation with values 1..n.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hooklie {

using Int = boost::multiprecision::cpp_int;

/// Sum of the primitive d-th roots of unity.
inline int moebius(long long d) {
  if (d < 1) throw std::invalid_argument("moebius: argument must be positive");
  int sign = 1;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

inline std::vector<long long> divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline bool is_squarefree(long long n) { return moebius(n) != 0; }

inline Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Binomial coefficient with binom(a, b) = 0 whenever b < 0 or 0 <= a < b.
inline Int binomial(const Int& a, long long b) {
  if (b < 0) return 0;
  if (a >= 0 && a < b) return 0;
  Int num = 1;
  Int den = 1;
  for (long long i = 0; i < b; ++i) {
    num *= (a - i);
    den *= (i + 1);
  }
  return num / den;
}

// ---------------------------------------------------------------------------
// Partition

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  /// Sorts and drops zeros, so any multiset of part sizes is accepted.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  /// (r^s)
  static Partition rectangle(int r, int s) {
    return Partition(std::vector<int>(static_cast<std::size_t>(s), r));
  }

  /// (n - k, 1^k)
  static Partition hook(int n, int k) {
    if (k < 0 || k >= n) throw std::invalid_argument("Partition::hook: need 0 <= k < n");
    std::vector<int> p{n - k};
    p.insert(p.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(p));
  }

  /// Accepts "4,2,1", "(4,2,1)", "4 2 1" and exponent shorthand such as "2^3,1".
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      auto caret = token.find('^');
      try {
        if (caret == std::string::npos) {
          parts.push_back(std::stoi(token));
        } else {
          int part = std::stoi(token.substr(0, caret));
          int times = std::stoi(token.substr(caret + 1));
          if (times < 0) throw std::invalid_argument("negative exponent");
          parts.insert(parts.end(), static_cast<std::size_t>(times), part);
        }
      } catch (const std::logic_error&) {
        throw std::invalid_argument("Partition::parse: bad token '" + token + "'");
      }
      token.clear();
    };
    for (char ch : text) {
      if (ch == ',' || ch == ' ' || ch == '(' || ch == ')' || ch == '[' || ch == ']') {
        flush();
      } else {
        token.push_back(ch);
      }
    }
    flush();
    for (int p : parts)
      if (p <= 0) throw std::invalid_argument("Partition::parse: parts must be positive");
    return from_unsorted(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  bool is_rectangular() const {
    return !parts_.empty() && parts_.front() == parts_.back();
  }

  bool is_hook() const { return parts_.size() <= 1 || parts_[1] == 1; }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 0; j < (parts_.empty() ? 0 : parts_.front()); ++j) {
      int len = 0;
      for (int p : parts_)
        if (p > j) ++len;
      c.push_back(len);
    }
    return Partition(std::move(c));
  }

  /// Order of the centralizer of a permutation of this cycle type:
  /// prod_i i^{k_i} k_i!.
  Int centralizer_order() const {
    Int z = 1;
    for (int i = 1; i <= size_; ++i) {
      int k = multiplicity(i);
      for (int t = 0; t < k; ++t) z *= i;
      z *= factorial(k);
    }
    return z;
  }

  /// Number of permutations of this cycle type.
  Int class_size() const { return factorial(size_) / centralizer_order(); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// ---------------------------------------------------------------------------
// Restricted partitions P(i)_r^s

/// A weakly decreasing s-tuple with entries in [0, r].
struct RestrictedPartition {
  std::vector<int> gamma;
  int bound = 0;  // r

  int sum() const { return std::accumulate(gamma.begin(), gamma.end(), 0); }

  /// k_j = #{l : gamma_l = j}, for j = 0..r
  std::vector<int> multiplicities() const {
    std::vector<int> k(static_cast<std::size_t>(bound) + 1, 0);
    for (int g : gamma) ++k[static_cast<std::size_t>(g)];
    return k;
  }

  bool operator==(const RestrictedPartition&) const = default;
};

/// Lazy lexicographic enumeration of the s-tuples r >= g_1 >= ... >= g_s >= 0
/// summing to i. With `positive_only`, tuples containing a zero are skipped.
class RestrictedPartitions {
 public:
  RestrictedPartitions(int i, int r, int s, bool positive_only = false)
      : i_(i), r_(r), s_(s), lo_(positive_only ? 1 : 0) {
    if (i < 0 || r < 0 || s < 0)
      throw std::invalid_argument("restricted_partitions: arguments must be non-negative");
  }

  class iterator {
   public:
    using value_type = RestrictedPartition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(const RestrictedPartitions* owner) : owner_(owner) {
      cur_.bound = owner->r_;
      cur_.gamma.assign(static_cast<std::size_t>(owner->s_), 0);
      done_ = !fill_min(0, owner->i_, owner->r_);
    }

    const RestrictedPartition& operator*() const { return cur_; }
    const RestrictedPartition* operator->() const { return &cur_; }

    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }

    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    // Smallest lexicographic weakly decreasing completion of positions
    // [from, s) with the given sum and upper bound.
    bool fill_min(int from, int sum, int bound) {
      int len = owner_->s_ - from;
      int lo = owner_->lo_;
      if (len == 0) return sum == 0;
      if (sum < lo * len || sum > bound * len) return false;
      for (int p = from; p < owner_->s_; ++p) {
        int left = owner_->s_ - p;
        int v = (sum + left - 1) / left;  // ceil
        v = std::max(v, lo);
        cur_.gamma[static_cast<std::size_t>(p)] = v;
        sum -= v;
      }
      return sum == 0;
    }

    void advance() {
      const int s = owner_->s_;
      int prefix = 0;
      std::vector<int> prefix_sums(static_cast<std::size_t>(s) + 1, 0);
      for (int p = 0; p < s; ++p) {
        prefix += cur_.gamma[static_cast<std::size_t>(p)];
        prefix_sums[static_cast<std::size_t>(p) + 1] = prefix;
      }
      for (int p = s - 2; p >= 0; --p) {
        int cap = p == 0 ? owner_->r_ : cur_.gamma[static_cast<std::size_t>(p) - 1];
        int v = cur_.gamma[static_cast<std::size_t>(p)] + 1;
        if (v > cap) continue;
        int rest = owner_->i_ - prefix_sums[static_cast<std::size_t>(p)] - v;
        int len = s - p - 1;
        if (rest < owner_->lo_ * len || rest > v * len) continue;
        cur_.gamma[static_cast<std::size_t>(p)] = v;
        fill_min(p + 1, rest, v);
        return;
      }
      done_ = true;
    }

    const RestrictedPartitions* owner_ = nullptr;
    RestrictedPartition cur_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int i_, r_, s_, lo_;
};

inline RestrictedPartitions restricted_partitions(int i, int r, int s) {
  return RestrictedPartitions(i, r, s);
}

// ---------------------------------------------------------------------------
// Subsets of [n]

class Subset {
 public:
  static constexpr int kMaxN = 63;

  Subset() = default;
  Subset(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("Subset: ambient size out of range");
    if (n < 64 && (bits >> n) != 0) throw std::invalid_argument("Subset: element outside [n]");
  }

  static Subset from_members(int n, const std::vector<int>& members) {
    std::uint64_t b = 0;
    for (int m : members) {
      if (m < 1 || m > n) throw std::invalid_argument("Subset: element outside [n]");
      b |= std::uint64_t{1} << (m - 1);
    }
    return Subset(n, b);
  }
  static Subset empty(int n) { return Subset(n, 0); }
  static Subset full(int n) { return Subset(n, n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))); }
  /// [k] = {1..k} inside [n]
  static Subset interval(int n, int k) { return Subset(n, full(k).bits()); }

  int ambient() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool contains(int i) const { return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1U); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == full(n_).bits_; }

  std::vector<int> members() const {
    std::vector<int> m;
    for (int i = 1; i <= n_; ++i)
      if (contains(i)) m.push_back(i);
    return m;
  }

  Subset with(int i) const { return from_bits_checked(bits_ | (std::uint64_t{1} << (i - 1))); }
  Subset without(int i) const { return Subset(n_, bits_ & ~(std::uint64_t{1} << (i - 1))); }

  /// Same members viewed inside [m]; members above m are dropped.
  Subset restrict_to(int m) const { return Subset(m, bits_ & full(m).bits_); }
  Subset extend_to(int m) const {
    if (m < n_) throw std::invalid_argument("Subset::extend_to: smaller ambient size");
    return Subset(m, bits_);
  }

  /// sh: i -> i + 1 (mod n).
  Subset rotate() const {
    if (n_ == 0) return *this;
    std::uint64_t top = (bits_ >> (n_ - 1)) & 1U;
    std::uint64_t shifted = (bits_ << 1) & full(n_).bits_;
    return Subset(n_, shifted | top);
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int m : members()) {
      if (!first) s += ',';
      s += std::to_string(m);
      first = false;
    }
    return s + "}";
  }

  auto operator<=>(const Subset& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    return bits_ <=> o.bits_;
  }
  bool operator==(const Subset&) const = default;

 private:
  Subset from_bits_checked(std::uint64_t b) const { return Subset(n_, b); }

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

inline Subset rotate_subset(const Subset& j) { return j.rotate(); }

// ---------------------------------------------------------------------------
// Permutations

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Permutation: not a bijection on [n]");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return Permutation(std::move(p));
  }

  /// "2341" for n <= 9, otherwise comma separated.
  static Permutation parse(std::string_view text) {
    std::vector<int> v;
    if (text.find(',') == std::string_view::npos && text.find(' ') == std::string_view::npos) {
      for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("Permutation::parse: bad digit");
        v.push_back(c - '0');
      }
    } else {
      std::string tok;
      for (char c : std::string(text) + ",") {
        if (c == ',' || c == ' ') {
          if (!tok.empty()) v.push_back(std::stoi(tok));
          tok.clear();
        } else {
          tok.push_back(c);
        }
      }
    }
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  /// pi(i), 1-based
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv[static_cast<std::size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  /// (this * other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out[i] = images_[static_cast<std::size_t>(other.images_[i]) - 1];
    return Permutation(std::move(out));
  }

  Partition cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j]) - 1) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
  }

  std::string to_string() const {
    std::string s;
    bool sep = images_.size() > 9;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (sep && i) s += ',';
      s += std::to_string(images_[i]);
    }
    return s;
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Des(pi) as a subset of [n-1].
inline Subset descent_set(const Permutation& pi) {
  const int n = pi.size();
  std::uint64_t bits = 0;
  for (int i = 1; i < n; ++i)
    if (pi(i) > pi(i + 1)) bits |= std::uint64_t{1} << (i - 1);
  return Subset(std::max(n - 1, 0), bits);
}

/// Cellini's cyclic descent set, with pi_{n+1} = pi_1, as a subset of [n].
inline Subset cellini_cdes(const Permutation& pi) {
  const int n = pi.size();
  Subset d = descent_set(pi).extend_to(n);
  if (n > 0 && pi(n) > pi(1)) d = d.with(n);
  return d;
}

/// All permutations of a given cycle type, in lexicographic order of their
/// one-line notation. Built position by position; a partial assignment is
/// abandoned as soon as it closes a cycle whose length is no longer available
/// or leaves an open chain longer than any remaining cycle length.
class ConjugacyClass {
 public:
  explicit ConjugacyClass(Partition mu) : mu_(std::move(mu)) {
    if (mu_.size() < 1) throw std::invalid_argument("conjugacy_class: need n >= 1");
  }

  const Partition& cycle_type() const { return mu_; }
  int degree() const { return mu_.size(); }

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(const Partition& mu) : n_(mu.size()) {
      remaining_.assign(static_cast<std::size_t>(n_) + 1, 0);
      for (int p : mu.parts()) ++remaining_[static_cast<std::size_t>(p)];
      img_.assign(static_cast<std::size_t>(n_), -1);
      inv_.assign(static_cast<std::size_t>(n_), -1);
      closed_.assign(static_cast<std::size_t>(n_), 0);
      pos_ = 0;
      search();
    }

    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++() {
      pos_ = n_ - 1;
      search();
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    int max_remaining() const {
      for (int l = n_; l >= 1; --l)
        if (remaining_[static_cast<std::size_t>(l)] > 0) return l;
      return 0;
    }

    void unassign(int i) {
      int v = img_[static_cast<std::size_t>(i)];
      if (v < 0) return;
      if (closed_[static_cast<std::size_t>(i)] > 0)
        ++remaining_[static_cast<std::size_t>(closed_[static_cast<std::size_t>(i)])];
      closed_[static_cast<std::size_t>(i)] = 0;
      inv_[static_cast<std::size_t>(v)] = -1;
      img_[static_cast<std::size_t>(i)] = -1;
    }

    // Try img[i] = v; returns false (and leaves state unchanged) if pruned.
    bool try_assign(int i, int v) {
      if (inv_[static_cast<std::size_t>(v)] >= 0) return false;
      img_[static_cast<std::size_t>(i)] = v;
      inv_[static_cast<std::size_t>(v)] = i;
      int len = 1;
      int w = v;
      while (w != i && img_[static_cast<std::size_t>(w)] >= 0) {
        w = img_[static_cast<std::size_t>(w)];
        ++len;
      }
      if (w == i) {
        if (remaining_[static_cast<std::size_t>(len)] == 0) {
          inv_[static_cast<std::size_t>(v)] = -1;
          img_[static_cast<std::size_t>(i)] = -1;
          return false;
        }
        --remaining_[static_cast<std::size_t>(len)];
        closed_[static_cast<std::size_t>(i)] = len;
        return true;
      }
      // open chain: walk back from i, forward from v
      int points = len + 1;
      for (int b = inv_[static_cast<std::size_t>(i)]; b >= 0; b = inv_[static_cast<std::size_t>(b)]) ++points;
      if (points > max_remaining()) {
        inv_[static_cast<std::size_t>(v)] = -1;
        img_[static_cast<std::size_t>(i)] = -1;
        return false;
      }
      return true;
    }

    // Depth-first search resuming at pos_: the value currently at pos_ (if
    // any) is replaced by the next feasible larger one.
    void search() {
      while (pos_ >= 0) {
        if (pos_ == n_) {
          std::vector<int> one_line(static_cast<std::size_t>(n_));
          for (int i = 0; i < n_; ++i) one_line[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
          current_ = Permutation(std::move(one_line));
          done_ = false;
          return;
        }
        int start = img_[static_cast<std::size_t>(pos_)] + 1;
        unassign(pos_);
        bool placed = false;
        for (int v = start; v < n_; ++v) {
          if (try_assign(pos_, v)) {
            placed = true;
            break;
          }
        }
        if (placed) {
          ++pos_;
          if (pos_ < n_) img_[static_cast<std::size_t>(pos_)] = -1;
        } else {
          --pos_;
        }
      }
      done_ = true;
    }

    int n_ = 0;
    int pos_ = 0;
    std::vector<int> img_, inv_, closed_, remaining_;
    Permutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(mu_); }
  std::default_sentinel_t end() const { return {}; }

  std::vector<Permutation> to_vector() const {
    std::vector<Permutation> out;
    for (auto it = begin(); it != end(); ++it) out.push_back(*it);
    return out;
  }

 private:
  Partition mu_;
};

inline ConjugacyClass conjugacy_class(const Partition& mu) { return ConjugacyClass(mu); }

// ---------------------------------------------------------------------------
// Shapes and standard Young tableaux

/// A straight shape, or a direct sum (1^k) (+) (n-k): a single column of k
/// cells strictly southwest of a row of n-k cells.
class Shape {
 public:
  static Shape straight(const Partition& lambda) {
    Shape s;
    s.outer_ = lambda.parts();
    s.inner_.assign(s.outer_.size(), 0);
    s.n_ = lambda.size();
    s.label_ = "(" + lambda.to_string() + ")";
    return s;
  }

  /// (1^k) (+) (n-k) realized as the skew shape (n, 1^k) / (k).
  static Shape column_plus_row(int k, int n) {
    if (k < 0 || k > n || n < 1) throw std::invalid_argument("Shape::column_plus_row: need 0 <= k <= n, n >= 1");
    Shape s;
    s.outer_.push_back(n);
    s.inner_.push_back(k);
    for (int i = 0; i < k; ++i) {
      s.outer_.push_back(1);
      s.inner_.push_back(0);
    }
    s.n_ = n;
    s.label_ = "(1^" + std::to_string(k) + ")+(" + std::to_string(n - k) + ")";
    return s;
  }

  /// Only the two supported families are accepted.
  static Shape skew(const Partition& outer, const Partition& inner) {
    if (inner.empty()) return straight(outer);
    const auto& o = outer.parts();
    const auto& in = inner.parts();
    int k = static_cast<int>(o.size()) - 1;
    bool ok = in.size() == 1 && in[0] == k && !o.empty() && o[0] > k;
    for (std::size_t i = 1; ok && i < o.size(); ++i) ok = o[i] == 1;
    if (!ok)
      throw std::invalid_argument("Shape::skew: only straight shapes and (1^k)+(n-k) are supported");
    return column_plus_row(k, o[0]);
  }

  int size() const { return n_; }
  int rows() const { return static_cast<int>(outer_.size()); }
  int row_start(int r) const { return inner_[static_cast<std::size_t>(r)]; }
  int row_end(int r) const { return outer_[static_cast<std::size_t>(r)]; }
  bool contains(int r, int c) const {
    return r >= 0 && r < rows() && c >= row_start(r) && c < row_end(r);
  }
  const std::string& label() const { return label_; }

 private:
  std::vector<int> outer_, inner_;
  int n_ = 0;
  std::string label_;
};

struct Tableau {
  /// row_of[v-1] is the row holding entry v (row 0 on top).
  std::vector<int> row_of;
  /// rows[r] lists the entries of row r left to right.
  std::vector<std::vector<int>> rows;

  int size() const { return static_cast<int>(row_of.size()); }
};

/// i is a descent when i+1 sits in a lower row than i.
inline Subset descent_set(const Tableau& t) {
  const int n = t.size();
  std::uint64_t bits = 0;
  for (int i = 1; i < n; ++i)
    if (t.row_of[static_cast<std::size_t>(i)] > t.row_of[static_cast<std::size_t>(i) - 1])
      bits |= std::uint64_t{1} << (i - 1);
  return Subset(std::max(n - 1, 0), bits);
}

/// All standard fillings of a supported shape.
inline std::vector<Tableau> standard_tableaux(const Shape& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  const int R = shape.rows();
  std::vector<int> filled(static_cast<std::size_t>(R), 0);  // cells filled per row
  Tableau cur;
  cur.row_of.assign(static_cast<std::size_t>(n), -1);
  cur.rows.assign(static_cast<std::size_t>(R), {});
  auto rec = [&](auto& self, int v) -> void {
    if (v > n) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r < R; ++r) {
      int c = shape.row_start(r) + filled[static_cast<std::size_t>(r)];
      if (!shape.contains(r, c)) continue;
      // the cell above must be outside the shape or already filled
      if (r > 0 && shape.contains(r - 1, c) &&
          c >= shape.row_start(r - 1) + filled[static_cast<std::size_t>(r) - 1])
        continue;
      ++filled[static_cast<std::size_t>(r)];
      cur.row_of[static_cast<std::size_t>(v) - 1] = r;
      cur.rows[static_cast<std::size_t>(r)].push_back(v);
      self(self, v + 1);
      cur.rows[static_cast<std::size_t>(r)].pop_back();
      --filled[static_cast<std::size_t>(r)];
    }
  };
  rec(rec, 1);
  return out;
}

inline std::vector<Tableau> syt(const Shape& shape) { return standard_tableaux(shape); }

// ---------------------------------------------------------------------------
// Kostka numbers

namespace detail {

struct KostkaMemo {
  std::shared_mutex mutex;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Int> table;
};

inline KostkaMemo& kostka_memo() {
  static KostkaMemo memo;
  return memo;
}

// Number of SSYT of shape `lambda` with content beta[0..m).
// The largest entry m occupies a horizontal strip lambda/nu of size beta[m-1].
inline Int kostka_rec(const std::vector<int>& lambda, const std::vector<int>& beta) {
  if (beta.empty()) {
    for (int p : lambda)
      if (p != 0) return 0;
    return 1;
  }
  auto key = std::make_pair(lambda, beta);
  auto& memo = kostka_memo();
  {
    std::shared_lock lock(memo.mutex);
    if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
  }
  int strip = beta.back();
  std::vector<int> rest(beta.begin(), beta.end() - 1);
  std::vector<int> nu = lambda;
  Int total = 0;
  auto rec = [&](auto& self, std::size_t row, int left) -> void {
    if (row == lambda.size()) {
      if (left == 0) {
        std::vector<int> trimmed = nu;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        total += kostka_rec(trimmed, rest);
      }
      return;
    }
    int below = row + 1 < lambda.size() ? lambda[row + 1] : 0;
    int max_take = std::min(left, lambda[row] - below);
    for (int take = 0; take <= max_take; ++take) {
      nu[row] = lambda[row] - take;
      self(self, row + 1, left - take);
    }
    nu[row] = lambda[row];
  };
  rec(rec, 0, strip);
  std::unique_lock lock(memo.mutex);
  memo.table.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// Number of semistandard tableaux of shape lambda and content beta, where
/// beta is any composition of |lambda| (zero entries allowed).
inline Int kostka(const Partition& lambda, const std::vector<int>& beta) {
  int total = 0;
  for (int b : beta) {
    if (b < 0) throw std::invalid_argument("kostka: negative content entry");
    total += b;
  }
  if (total != lambda.size()) throw std::invalid_argument("kostka: |lambda| != |beta|");
  return detail::kostka_rec(lambda.parts(), beta);
}

}  // namespace hooklie

/// \file
/// Cyclic descent extensions on conjugacy classes of S_n.
///
/// A cyclic extension of Des on a finite set is a map cDes into subsets of
/// [n] together with a bijection p such that
///   cDes(T) & [n-1] == Des(T),  cDes(p(T)) == sh(cDes(T)),  {} != cDes(T) != [n].
/// Its fiber sizes c_J are the unknowns of a linear system:
///   c_D + c_{D u {n}} = #Des^{-1}(D)   for D in [n-1],
///   c_J = c_{sh(J)},  c_{} = c_{[n]} = 0.
/// The system is solved exactly by union-find with affine offsets; any
/// non-negative integer solution is realized by construct_extension.

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "hooklie/characters.hpp"
#include "hooklie/combinat.hpp"
#include "hooklie/lie.hpp"

namespace hooklie {

inline constexpr int kDefaultClassDegreeBound = 10;

/// Fiber sizes of a descent map with values in subsets of [n-1].
struct DescentDistribution {
  int n = 0;
  std::map<Subset, long long> fibers;  // keys have ambient size n - 1

  long long operator()(const Subset& d) const {
    auto it = fibers.find(d);
    return it == fibers.end() ? 0 : it->second;
  }

  long long total() const {
    long long t = 0;
    for (const auto& [d, c] : fibers) t += c;
    return t;
  }

  bool operator==(const DescentDistribution&) const = default;
};

inline DescentDistribution des_distribution(const Partition& mu, int degree_bound = kDefaultClassDegreeBound) {
  if (mu.size() > degree_bound)
    throw GuardExceeded("des_distribution: n = " + std::to_string(mu.size()) +
                        " exceeds the class degree bound " + std::to_string(degree_bound));
  DescentDistribution dist{mu.size(), {}};
  for (const auto& pi : conjugacy_class(mu)) ++dist.fibers[descent_set(pi)];
  return dist;
}

// ---------------------------------------------------------------------------
// Solver

enum class InfeasibleReason {
  kInconsistent,    // two fiber equations contradict each other
  kNonIntegral,     // propagation forces a half-integer
  kNegative,        // the unique solution has a negative entry
  kUnderdetermined, // some c_J is not pinned by the equations
};

inline const char* describe(InfeasibleReason r) {
  switch (r) {
    case InfeasibleReason::kInconsistent: return "inconsistent fiber equations";
    case InfeasibleReason::kNonIntegral: return "non-integral forced value";
    case InfeasibleReason::kNegative: return "forced negative fiber size";
    case InfeasibleReason::kUnderdetermined: return "fiber sizes not determined by the equations";
  }
  return "unknown";
}

struct Infeasible {
  InfeasibleReason reason;
  Subset witness;  // the offending D (equation) or J (negative / free entry)

  std::string to_string() const { return std::string(describe(reason)) + " at " + witness.to_string(); }
};

/// c_J for every {} != J != [n] (ambient n), zeros included.
struct CyclicFibers {
  int n = 0;
  std::map<Subset, long long> c;

  long long operator()(const Subset& j) const {
    auto it = c.find(j);
    return it == c.end() ? 0 : it->second;
  }
};

namespace detail {

// Variables x_v; each non-root points to a parent with x_v = sign * x_parent + offset.
class AffineUnionFind {
 public:
  explicit AffineUnionFind(std::size_t size)
      : parent_(size), sign_(size, 1), offset_(size, 0), value_(size) {
    for (std::size_t i = 0; i < size; ++i) parent_[i] = i;
  }

  struct Found {
    std::size_t root;
    int sign;
    long long offset;
  };

  Found find(std::size_t v) {
    if (parent_[v] == v) return {v, 1, 0};
    Found up = find(parent_[v]);
    // x_v = s_v (s_p x_root + o_p) + o_v
    offset_[v] += sign_[v] * up.offset;
    sign_[v] *= up.sign;
    parent_[v] = up.root;
    return {up.root, sign_[v], offset_[v]};
  }

  std::optional<long long> value(std::size_t v) {
    Found f = find(v);
    if (!value_[f.root]) return std::nullopt;
    return f.sign * *value_[f.root] + f.offset;
  }

  enum class Status { kOk, kInconsistent, kNonIntegral };

  /// x_v = k
  Status fix(std::size_t v, long long k) {
    Found f = find(v);
    return pin(f.root, f.sign * (k - f.offset));
  }

  /// ca * x_a + cb * x_b = k, with ca, cb in {+1, -1}
  Status relate(std::size_t a, int ca, std::size_t b, int cb, long long k) {
    Found fa = find(a);
    Found fb = find(b);
    const int A = ca * fa.sign;
    const int B = cb * fb.sign;
    const long long rhs = k - ca * fa.offset - cb * fb.offset;
    if (fa.root == fb.root) {
      const int coef = A + B;
      if (coef == 0) {
        if (rhs != 0) return Status::kInconsistent;
        return Status::kOk;
      }
      if (rhs % coef != 0) return Status::kNonIntegral;
      return pin(fa.root, rhs / coef);
    }
    const auto& va = value_[fa.root];
    const auto& vb = value_[fb.root];
    if (va && vb) return A * *va + B * *vb == rhs ? Status::kOk : Status::kInconsistent;
    if (va) return pin(fb.root, B * (rhs - A * *va));
    if (vb) return pin(fa.root, A * (rhs - B * *vb));
    // x_rb = B * rhs - A * B * x_ra
    parent_[fb.root] = fa.root;
    sign_[fb.root] = -A * B;
    offset_[fb.root] = B * rhs;
    return Status::kOk;
  }

 private:
  Status pin(std::size_t root, long long v) {
    if (value_[root]) return *value_[root] == v ? Status::kOk : Status::kInconsistent;
    value_[root] = v;
    return Status::kOk;
  }

  std::vector<std::size_t> parent_;
  std::vector<int> sign_;
  std::vector<long long> offset_;
  std::vector<std::optional<long long>> value_;
};

}  // namespace detail

/// Fiber sizes of the (unique) cyclic extension of `dist`, or the reason none
/// exists. Every c_J must be pinned by propagation alone.
inline std::variant<CyclicFibers, Infeasible> solve_extension(const DescentDistribution& dist) {
  const int n = dist.n;
  if (n < 1 || n > 20) throw std::invalid_argument("solve_extension: n must be in [1, 20]");
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t full = size - 1;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  using Status = detail::AffineUnionFind::Status;
  detail::AffineUnionFind uf(size);

  auto fail = [&](Status st, std::uint64_t mask, int ambient) -> std::optional<Infeasible> {
    if (st == Status::kOk) return std::nullopt;
    return Infeasible{st == Status::kInconsistent ? InfeasibleReason::kInconsistent : InfeasibleReason::kNonIntegral,
                      Subset(ambient, mask)};
  };

  if (auto f = fail(uf.fix(0, 0), 0, n)) return *f;
  if (auto f = fail(uf.fix(full, 0), full, n)) return *f;
  for (std::uint64_t j = 0; j < size; ++j) {
    std::uint64_t sh = Subset(n, j).rotate().bits();
    if (auto f = fail(uf.relate(j, 1, sh, -1, 0), j, n)) return *f;
  }
  for (std::uint64_t d = 0; d < top; ++d) {
    long long count = dist(Subset(n - 1, d));
    if (auto f = fail(uf.relate(d, 1, d | top, 1, count), d, n - 1)) return *f;
  }

  CyclicFibers out{n, {}};
  for (std::uint64_t j = 1; j < full; ++j) {
    auto v = uf.value(j);
    if (!v) return Infeasible{InfeasibleReason::kUnderdetermined, Subset(n, j)};
    if (*v < 0) return Infeasible{InfeasibleReason::kNegative, Subset(n, j)};
    out.c.emplace(Subset(n, j), *v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit construction

struct ExtensionRecord {
  Permutation pi;
  Subset des;
  Subset cdes;
  Permutation p_image;
};

struct CyclicExtensionSolution {
  Partition mu;
  int n = 0;
  CyclicFibers fibers;
  std::vector<ExtensionRecord> records;  // lexicographic in pi

  const ExtensionRecord& record_of(const Permutation& pi) const {
    auto it = std::lower_bound(records.begin(), records.end(), pi,
                               [](const ExtensionRecord& r, const Permutation& q) { return r.pi < q; });
    if (it == records.end() || it->pi != pi) throw std::out_of_range("record_of: not in the class");
    return *it;
  }
};

struct AxiomCheck {
  bool extension = true;
  bool equivariance = true;
  bool non_escher = true;
  bool bijection = true;
  bool fibers_match = true;

  bool all() const { return extension && equivariance && non_escher && bijection && fibers_match; }
};

/// Exhaustive check of the three axioms, that p is a bijection of the class,
/// and that the cDes fibers have the solver's sizes.
inline AxiomCheck verify_axioms(const CyclicExtensionSolution& sol) {
  AxiomCheck chk;
  const int n = sol.n;
  std::map<Subset, long long> counts;
  std::map<Permutation, int> hits;
  for (const auto& rec : sol.records) {
    if (rec.cdes.ambient() != n || rec.cdes.restrict_to(n - 1) != rec.des || descent_set(rec.pi) != rec.des)
      chk.extension = false;
    if (rec.cdes.is_empty() || rec.cdes.is_full()) chk.non_escher = false;
    ++counts[rec.cdes];
    ++hits[rec.p_image];
    auto it = std::lower_bound(sol.records.begin(), sol.records.end(), rec.p_image,
                               [](const ExtensionRecord& r, const Permutation& q) { return r.pi < q; });
    if (it == sol.records.end() || it->pi != rec.p_image) {
      chk.bijection = false;
      continue;
    }
    if (it->cdes != rec.cdes.rotate()) chk.equivariance = false;
  }
  for (const auto& [pi, h] : hits)
    if (h != 1) chk.bijection = false;
  if (hits.size() != sol.records.size()) chk.bijection = false;
  for (const auto& [j, c] : sol.fibers.c) {
    auto it = counts.find(j);
    if ((it == counts.end() ? 0 : it->second) != c) chk.fibers_match = false;
  }
  for (const auto& [j, c] : counts)
    if (sol.fibers(j) != c) chk.fibers_match = false;
  return chk;
}

/// Why a class has no cyclic extension.
struct ExtensionFailure {
  Infeasible solver;
  std::optional<NoExtension> hook_obstruction;  // read off the hook fibers #Des^{-1}([k])
  std::optional<std::string> escher_note;
};

/// Classes (1^n) and (2^s) admit only a degenerate extension hitting {} or [n].
inline std::optional<std::string> escher_note(const Partition& mu) {
  if (!mu.is_rectangular()) return std::nullopt;
  const int r = mu.parts().front();
  if (r == 1) return std::string("identity class: only an Escher-type extension, with cDes = {}");
  if (r == 2) return std::string("fixed-point-free involutions: only an Escher-type extension, reaching cDes = [n]");
  return std::nullopt;
}

/// Hook fibers #{pi : Des(pi) = [k]}, k = 0..n-1.
inline std::vector<Int> hook_fibers(const DescentDistribution& dist) {
  std::vector<Int> m;
  for (int k = 0; k < dist.n; ++k) m.emplace_back(dist(Subset::interval(dist.n - 1, k)));
  return m;
}

inline std::variant<CyclicExtensionSolution, ExtensionFailure> construct_extension(
    const Partition& mu, int degree_bound = kDefaultClassDegreeBound) {
  const DescentDistribution dist = des_distribution(mu, degree_bound);
  auto solved = solve_extension(dist);
  if (auto* inf = std::get_if<Infeasible>(&solved)) {
    ExtensionFailure fail{*inf, std::nullopt, escher_note(mu)};
    auto d = d_from_hooks(hook_fibers(dist));
    if (auto* no = std::get_if<NoExtension>(&d)) fail.hook_obstruction = *no;
    return fail;
  }
  const auto& fibers = std::get<CyclicFibers>(solved);
  const int n = mu.size();

  CyclicExtensionSolution sol{mu, n, fibers, {}};
  // Within each Des fiber D (lexicographic order), the first c_{D u {n}}
  // elements receive D u {n}, the rest receive D.
  std::map<Subset, long long> handed_out;
  std::map<Subset, std::vector<std::size_t>> by_cdes;
  for (const auto& pi : conjugacy_class(mu)) {
    Subset des = descent_set(pi);
    Subset wide = des.extend_to(n);
    Subset with_n = wide.with(n);
    long long& used = handed_out[des];
    Subset cdes = used < fibers(with_n) ? with_n : wide;
    ++used;
    by_cdes[cdes].push_back(sol.records.size());
    sol.records.push_back({pi, des, cdes, Permutation{}});
  }
  // p sends the i-th element of fiber J to the i-th element of fiber sh(J).
  for (const auto& [j, members] : by_cdes) {
    const auto& next = by_cdes[j.rotate()];
    if (next.size() != members.size())
      throw std::logic_error("construct_extension: fiber sizes differ along a rotation orbit");
    for (std::size_t i = 0; i < members.size(); ++i)
      sol.records[members[i]].p_image = sol.records[next[i]].pi;
  }
  if (!verify_axioms(sol).all())
    throw std::logic_error("construct_extension: constructed map violates the axioms");
  return sol;
}

// ---------------------------------------------------------------------------
// Cellini's cyclic descents

/// True iff the multiset {CDes(pi) : pi in C_mu} is invariant under sh.
inline bool cellini_closed(const Partition& mu, int degree_bound = kDefaultClassDegreeBound) {
  if (mu.size() > degree_bound) throw GuardExceeded("cellini_closed: class degree above bound");
  std::map<Subset, long long> counts;
  for (const auto& pi : conjugacy_class(mu)) ++counts[cellini_cdes(pi)];
  for (const auto& [j, c] : counts) {
    auto it = counts.find(j.rotate());
    if (it == counts.end() || it->second != c) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fiber sizes from Schur multiplicities

/// (j2 - j1, ..., jt - j_{t-1}, j1 + n - jt) for I = {j1 < ... < jt}; (n) for a
/// singleton.
inline std::vector<int> cyclic_composition(const Subset& i) {
  const auto m = i.members();
  if (m.empty()) throw std::invalid_argument("cyclic_composition: empty set");
  const int n = i.ambient();
  if (m.size() == 1) return {n};
  std::vector<int> comp;
  for (std::size_t t = 1; t < m.size(); ++t) comp.push_back(m[t] - m[t - 1]);
  comp.push_back(m.front() + n - m.back());
  return comp;
}

/// sum_{{} != I in J} (-1)^{|J \ I|} sum_lambda m_lambda K(lambda, ccomp(n, I)),
/// using <h_beta, s_lambda> = K_{lambda, beta}.
inline Int affine_ribbon_fiber(const Partition& mu, const Subset& j,
                               const std::map<Partition, Int>& schur_mults) {
  const int n = mu.size();
  if (j.ambient() != n) throw std::invalid_argument("affine_ribbon_fiber: J must be a subset of [n]");
  if (j.is_empty() || j.is_full())
    throw std::invalid_argument("affine_ribbon_fiber: J must be nonempty and proper");
  Int total = 0;
  const std::uint64_t jb = j.bits();
  for (std::uint64_t ib = jb; ib != 0; ib = (ib - 1) & jb) {
    Subset i(n, ib);
    const auto beta = cyclic_composition(i);
    Int h = 0;
    for (const auto& [lambda, mult] : schur_mults)
      if (mult != 0) h += mult * kostka(lambda, beta);
    if ((j.size() - i.size()) % 2 == 0) total += h; else total -= h;
  }
  return total;
}

/// #{T in SYT(lambda) : Des(T) = J} for all J, memoized per lambda.
inline const std::map<Subset, long long>& tableau_descent_counts(const Partition& lambda) {
  static std::shared_mutex mutex;
  static std::map<Partition, std::map<Subset, long long>> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  }
  std::map<Subset, long long> counts;
  for (const auto& t : standard_tableaux(Shape::straight(lambda))) ++counts[descent_set(t)];
  std::unique_lock lock(mutex);
  return memo.emplace(lambda, std::move(counts)).first->second;
}

/// sum_lambda m_lambda #{T in SYT(lambda) : Des(T) = J}.
inline Int straight_ribbon_fiber(const Partition& mu, const Subset& j,
                                 const std::map<Partition, Int>& schur_mults) {
  if (j.ambient() != std::max(mu.size() - 1, 0))
    throw std::invalid_argument("straight_ribbon_fiber: J must be a subset of [n-1]");
  Int total = 0;
  for (const auto& [lambda, mult] : schur_mults) {
    if (mult == 0) continue;
    const auto& counts = tableau_descent_counts(lambda);
    if (auto it = counts.find(j); it != counts.end()) total += mult * it->second;
  }
  return total;
}

inline Int straight_ribbon_fiber(const Partition& mu, const Subset& j,
                                 std::uint64_t guard = kDefaultCentralizerGuard) {
  return straight_ribbon_fiber(mu, j, schur_multiplicities(mu, guard));
}

}  // namespace hooklie

#pragma once

// Rank, kernel and linearity of codes over Z_p, invariant reports, and the
// tabulated (r, k) reference data for p = 3.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zpzp2/code.hpp"
#include "zpzp2/construction.hpp"
#include "zpzp2/errors.hpp"
#include "zpzp2/gray.hpp"
#include "zpzp2/parallel.hpp"
#include "zpzp2/ring.hpp"

namespace zpzp2 {

/// Semi-echelon basis over GF(p). Every stored row has a pivot (first nonzero
/// coordinate, normalised to 1) at which later rows vanish.
class RowEchelon {
 public:
  RowEchelon(Prime p, std::size_t length) : p_(p), n_(length), inverse_(p.value(), 0) {
    for (Residue a = 1; a < p.value(); ++a)
      for (Residue b = 1; b < p.value(); ++b)
        if (a * b % p.value() == 1) inverse_[a] = static_cast<Symbol>(b);
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<GrayVector>& rows() const noexcept { return rows_; }

  /// Reduces v against the basis; adds it when independent. Returns true if added.
  bool insert(std::span<const Symbol> v) {
    scratch_.assign(v.begin(), v.end());
    reduce(scratch_);
    const auto it = std::find_if(scratch_.begin(), scratch_.end(), [](Symbol s) { return s != 0; });
    if (it == scratch_.end()) return false;
    const std::size_t pivot = static_cast<std::size_t>(it - scratch_.begin());
    const Residue inv = inverse_[*it];
    for (auto& s : scratch_) s = static_cast<Symbol>(s * inv % p_.value());
    rows_.push_back(scratch_);
    pivots_.push_back(pivot);
    return true;
  }

  bool in_span(std::span<const Symbol> v) {
    scratch_.assign(v.begin(), v.end());
    reduce(scratch_);
    return std::all_of(scratch_.begin(), scratch_.end(), [](Symbol s) { return s == 0; });
  }

 private:
  void reduce(GrayVector& v) const {
    const Residue p = p_.value();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Residue f = v[pivots_[r]];
      if (f == 0) continue;
      const Residue m = p - f;  // v -= f * row
      const auto& row = rows_[r];
      for (std::size_t j = 0; j < n_; ++j) v[j] = static_cast<Symbol>((v[j] + m * row[j]) % p);
    }
  }

  Prime p_;
  std::size_t n_;
  std::vector<Symbol> inverse_;
  std::vector<GrayVector> rows_;
  std::vector<std::size_t> pivots_;
  GrayVector scratch_;
};

/// Basis of the linear span <G>. Partitions are reduced independently and merged.
inline RowEchelon span_basis(const GrayCode& g, const ComputeOptions& opts = {}) {
  const unsigned w = resolve_workers(opts.workers);
  std::vector<std::optional<RowEchelon>> partial(w);
  parallel_chunks(g.size(), w, [&](std::size_t b, std::size_t e, unsigned c) {
    RowEchelon& ech = partial[c].emplace(g.prime(), g.length());
    for (std::size_t i = b; i < e; ++i) ech.insert(g.word(i));
  }, 256);
  RowEchelon merged(g.prime(), g.length());
  for (const auto& part : partial)
    if (part)
      for (const auto& row : part->rows()) merged.insert(row);
  return merged;
}

/// Dimension of the linear span of G over Z_p.
inline unsigned rank(const GrayCode& g, const ComputeOptions& opts = {}) {
  return static_cast<unsigned>(span_basis(g, opts).rank());
}

/// The linear span <G> as a code.
inline GrayCode span_code(const GrayCode& g, const ComputeOptions& opts = {}) {
  const auto basis = span_basis(g, opts);
  const Residue p = g.prime().value();
  const unsigned r = static_cast<unsigned>(basis.rank());
  const std::uint64_t size = ipow(p, r);
  if (size > opts.max_codewords)
    throw BudgetExceeded("span size exceeds codeword budget", size, opts.max_codewords);
  const std::size_t n = g.length();
  std::vector<Symbol> flat(size * n, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t rest = idx;
    const auto out = std::span(flat).subspan(idx * n, n);
    for (unsigned b = 0; b < r; ++b) {
      const Residue c = static_cast<Residue>(rest % p);
      rest /= p;
      if (c == 0) continue;
      const auto& row = basis.rows()[b];
      for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<Symbol>((out[j] + c * row[j]) % p);
    }
  }
  return GrayCode(g.prime(), n, std::move(flat));
}

struct KernelResult {
  std::vector<std::size_t> members;  // indices into the code, ascending
  unsigned dimension = 0;
};

namespace detail {

inline void require_zero(const GrayCode& g) {
  if (!g.contains_zero()) throw InvalidParameter("kernel requires the zero vector in the code");
}

/// True when x + c is a codeword for every codeword c.
inline bool translation_invariant(const GrayCode& g, std::span<const Symbol> x, unsigned workers) {
  const Symbol p = static_cast<Symbol>(g.prime().value());
  const std::size_t n = g.length();
  std::atomic<bool> ok{true};
  parallel_chunks(g.size(), workers, [&](std::size_t b, std::size_t e, unsigned) {
    GrayVector tmp(n);
    for (std::size_t i = b; i < e && ok.load(std::memory_order_relaxed); ++i) {
      add_mod(x, g.word(i), tmp, p);
      if (!g.contains(tmp)) ok.store(false, std::memory_order_relaxed);
    }
  }, 4096);
  return ok.load();
}

inline unsigned kernel_dimension(std::size_t size, Residue p) {
  const int e = exact_log(size, p);
  if (e < 0) throw std::logic_error("kernel size " + std::to_string(size) + " is not a power of p");
  return static_cast<unsigned>(e);
}

}  // namespace detail

/// K(G) = {x : x + G = G}. Since 0 is in G, K(G) is a subset of G, so only
/// codewords are candidates. Found kernel vectors grow K as a span; a failed
/// candidate x rules out the whole coset x + K.
inline KernelResult kernel(const GrayCode& g, const ComputeOptions& opts = {}) {
  detail::require_zero(g);
  enum : std::uint8_t { unknown, inside, outside };
  const std::size_t size = g.size(), n = g.length();
  const Symbol p = static_cast<Symbol>(g.prime().value());
  std::vector<std::uint8_t> status(size, unknown);
  std::vector<std::size_t> members{*g.index_of(GrayVector(n, 0))};
  status[members.front()] = inside;
  std::vector<std::size_t> generators;
  GrayVector tmp(n), acc(n);

  for (std::size_t x = 0; x < size; ++x) {
    if (status[x] != unknown) continue;
    const auto xv = g.word(x);
    if (detail::translation_invariant(g, xv, opts.workers)) {
      generators.push_back(x);
      const std::size_t base = members.size();
      for (std::size_t i = 0; i < base; ++i) {
        acc.assign(g.word(members[i]).begin(), g.word(members[i]).end());
        for (Residue lambda = 1; lambda < p; ++lambda) {
          add_mod(acc, xv, acc, p);
          const auto at = g.index_of(acc);
          if (!at) throw std::logic_error("kernel element sum left the code");
          status[*at] = inside;
          members.push_back(*at);
        }
      }
    } else {
      for (std::size_t k : members) {
        add_mod(xv, g.word(k), tmp, p);
        if (const auto at = g.index_of(tmp)) status[*at] = outside;
      }
    }
  }

  // K must be closed under adding each generator and have p^{#generators}
  // elements with independent generators, i.e. K = span(generators).
  RowEchelon ech(g.prime(), n);
  for (std::size_t gi : generators)
    if (!ech.insert(g.word(gi))) throw std::logic_error("kernel generators are dependent");
  for (std::size_t gi : generators)
    for (std::size_t k : members) {
      add_mod(g.word(k), g.word(gi), tmp, p);
      const auto at = g.index_of(tmp);
      if (!at || status[*at] != inside) throw std::logic_error("kernel is not closed under addition");
    }

  KernelResult out;
  out.dimension = detail::kernel_dimension(members.size(), p);
  if (out.dimension != generators.size()) throw std::logic_error("kernel size mismatch");
  std::sort(members.begin(), members.end());
  out.members = std::move(members);
  return out;
}

/// Kernel by definition: every codeword is tested against every codeword with
/// no early exit and no coset pruning. Quadratic; meant for small codes.
inline KernelResult kernel_by_definition(const GrayCode& g) {
  detail::require_zero(g);
  const Symbol p = static_cast<Symbol>(g.prime().value());
  GrayVector tmp(g.length());
  KernelResult out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    std::size_t misses = 0;
    for (std::size_t c = 0; c < g.size(); ++c) {
      add_mod(g.word(x), g.word(c), tmp, p);
      misses += !g.contains(tmp);
    }
    if (misses == 0) out.members.push_back(x);
  }
  out.dimension = detail::kernel_dimension(out.members.size(), p);
  return out;
}

/// |G| = p^rank, cross-checked against K(G) = G.
inline bool is_linear(const GrayCode& g, const ComputeOptions& opts = {}) {
  const unsigned r = rank(g, opts);
  const bool by_rank = ipow(g.prime().value(), r) == g.size();
  if (g.contains_zero()) {
    const bool by_kernel = kernel(g, opts).members.size() == g.size();
    if (by_rank != by_kernel) throw std::logic_error("rank and kernel disagree on linearity");
  }
  return by_rank;
}

inline bool is_nonlinearity_witness(const GrayCode& g, std::span<const Symbol> u,
                                    std::span<const Symbol> v) {
  if (u.size() != g.length() || v.size() != g.length()) return false;
  if (!g.contains(u) || !g.contains(v)) return false;
  GrayVector sum(g.length());
  add_mod(u, v, sum, static_cast<Symbol>(g.prime().value()));
  return !g.contains(sum);
}

/// First pair (u, v), u at index <= v in code order, with u + v outside G.
inline std::optional<std::pair<GrayVector, GrayVector>> nonlinearity_witness(
    const GrayCode& g, const ComputeOptions& opts = {}) {
  if (ipow(g.prime().value(), rank(g, opts)) == g.size()) return std::nullopt;
  const Symbol p = static_cast<Symbol>(g.prime().value());
  GrayVector sum(g.length());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) {
      add_mod(g.word(i), g.word(j), sum, p);
      if (!g.contains(sum)) {
        const auto u = g.word(i), v = g.word(j);
        return std::pair(GrayVector(u.begin(), u.end()), GrayVector(v.begin(), v.end()));
      }
    }
  throw std::logic_error("rank says non-linear but the code is closed under addition");
}

struct InvariantReport {
  Residue p = 0;
  CodeType type;
  std::size_t length = 0;
  std::uint64_t size = 0;
  std::size_t min_distance = 0;
  unsigned rank = 0;
  unsigned kernel_dim = 0;
  bool linear = false;
  bool gh = false;
  GhCheckMode gh_mode = GhCheckMode::full;
  std::vector<std::uint64_t> weight_distribution;  // empty for tabulated rows
};

/// Invariants of an already materialised code. Throws std::logic_error when
/// k <= log_p|G| <= r or linear <=> r = k <=> r = log_p|G| fails.
inline InvariantReport report(const GrayCode& g, const CodeType& type,
                              const ComputeOptions& opts = {}) {
  InvariantReport rep;
  rep.p = g.prime().value();
  rep.type = type;
  rep.length = g.length();
  rep.size = g.size();
  const auto verdict = is_gh_code(g, opts);
  rep.gh = verdict.is_gh;
  rep.gh_mode = verdict.mode;
  rep.weight_distribution = weight_distribution(g, opts);
  rep.min_distance = min_distance(g, opts);
  rep.rank = rank(g, opts);
  rep.kernel_dim = kernel(g, opts).dimension;

  const int log_size = exact_log(rep.size, rep.p);
  rep.linear = log_size >= 0 && static_cast<unsigned>(log_size) == rep.rank;
  const bool ordered = log_size >= 0 && rep.kernel_dim <= static_cast<unsigned>(log_size) &&
                       static_cast<unsigned>(log_size) <= rep.rank;
  if (!ordered || rep.linear != (rep.rank == rep.kernel_dim))
    throw std::logic_error("inconsistent invariants: r=" + std::to_string(rep.rank) +
                           " k=" + std::to_string(rep.kernel_dim) +
                           " |C|=" + std::to_string(rep.size));
  if (rep.gh && rep.min_distance * rep.p != rep.length * (rep.p - 1))
    throw std::logic_error("GH code with minimum distance other than N(p-1)/p");
  return rep;
}

inline InvariantReport report(const GeneratorMatrix& gen, const ComputeOptions& opts = {}) {
  const GrayCode g = gray_image(enumerate(gen, opts));
  return report(g, gen.type(), opts);
}

enum class SignatureVerdict { distinct, indistinguishable };

inline const char* to_string(SignatureVerdict v) noexcept {
  return v == SignatureVerdict::distinct ? "distinct" : "indistinguishable";
}

/// Distinct when size, minimum distance, (r, k) or (when both are known) the
/// weight distribution differ; that proves non-equivalence. Indistinguishable
/// is not a proof of equivalence.
inline SignatureVerdict signature_compare(const InvariantReport& a, const InvariantReport& b) {
  if (a.p != b.p || a.length != b.length)
    throw ShapeMismatch("signatures must share p and length");
  if (a.size != b.size || a.min_distance != b.min_distance || a.rank != b.rank ||
      a.kernel_dim != b.kernel_dim)
    return SignatureVerdict::distinct;
  if (!a.weight_distribution.empty() && !b.weight_distribution.empty() &&
      a.weight_distribution != b.weight_distribution)
    return SignatureVerdict::distinct;
  return SignatureVerdict::indistinguishable;
}

enum class ReferenceFamily { zp2_linear, sylvester, zpzp2_linear };

inline const char* to_string(ReferenceFamily f) noexcept {
  switch (f) {
    case ReferenceFamily::zp2_linear: return "Z9";
    case ReferenceFamily::sylvester: return "sylvester";
    case ReferenceFamily::zpzp2_linear: return "Z3Z9";
  }
  return "?";
}

/// One tabulated row: a GH code of length 3^t and its (r, k).
struct ReferenceRow {
  unsigned t;
  ReferenceFamily family;
  std::size_t alpha1;
  std::size_t alpha2;
  unsigned t1;
  unsigned t2;
  unsigned r;
  unsigned k;
  const char* provenance;
};

/// Table of types and (r, k) for Z9-linear and Z3Z9-linear GH codes, t = 2..8.
/// Only p = 3 is tabulated.
inline std::vector<ReferenceRow> reference_table(Residue p = 3) {
  if (p != 3) throw InvalidParameter("reference data exists only for p = 3");
  using F = ReferenceFamily;
  return {
      {2, F::zp2_linear, 0, 3, 1, 1, 3, 3, "(0,3;1,1) (3,3)"},
      {2, F::sylvester, 9, 0, 0, 3, 3, 3, "(9,0;0,3) (3,3)"},
      {2, F::zpzp2_linear, 3, 2, 1, 1, 4, 2, "(3,2;1,1) (4,2)"},

      {3, F::zp2_linear, 0, 9, 1, 2, 4, 4, "(0,9;1,2) (4,4)"},
      {3, F::zp2_linear, 0, 9, 2, 0, 5, 2, "(0,9;2,0) (5,2)"},
      {3, F::sylvester, 27, 0, 0, 4, 4, 4, "(27,0;0,4) (4,4)"},
      {3, F::zpzp2_linear, 9, 6, 1, 2, 5, 3, "(9,6;1,2) (5,3)"},

      {4, F::zp2_linear, 0, 27, 1, 3, 5, 5, "(0,27;1,3) (5,5)"},
      {4, F::zp2_linear, 0, 27, 2, 1, 6, 3, "(0,27;2,1) (6,3)"},
      {4, F::sylvester, 81, 0, 0, 5, 5, 5, "(81,0;0,5) (5,5)"},
      {4, F::zpzp2_linear, 27, 18, 1, 3, 6, 4, "(27,18;1,3) (6,4)"},
      {4, F::zpzp2_linear, 9, 24, 2, 1, 10, 3, "(9,24;2,1) (10,3)"},

      {5, F::zp2_linear, 0, 81, 1, 4, 6, 6, "(0,81;1,4) (6,6)"},
      {5, F::zp2_linear, 0, 81, 2, 2, 7, 4, "(0,81;2,2) (7,4)"},
      {5, F::zp2_linear, 0, 81, 3, 0, 11, 3, "(0,81;3,0) (11,3)"},
      {5, F::sylvester, 243, 0, 0, 6, 6, 6, "(243,0;0,6) (6,6)"},
      {5, F::zpzp2_linear, 81, 54, 1, 4, 7, 5, "(81,54;1,4) (7,5)"},
      {5, F::zpzp2_linear, 27, 72, 2, 2, 11, 4, "(27,72;2,2) (11,4)"},

      {6, F::zp2_linear, 0, 243, 1, 5, 7, 7, "(0,243;1,5) (7,7)"},
      {6, F::zp2_linear, 0, 243, 2, 3, 8, 5, "(0,243;2,3) (8,5)"},
      {6, F::zp2_linear, 0, 243, 3, 1, 12, 4, "(0,243;3,1) (12,4)"},
      {6, F::sylvester, 729, 0, 0, 7, 7, 7, "(729,0;0,7) (7,7)"},
      {6, F::zpzp2_linear, 243, 162, 1, 5, 8, 6, "(243,162;1,5) (8,6)"},
      {6, F::zpzp2_linear, 81, 216, 2, 3, 12, 5, "(81,216;2,3) (12,5)"},
      {6, F::zpzp2_linear, 27, 234, 3, 1, 20, 4, "(27,234;3,1) (20,4)"},

      {7, F::zp2_linear, 0, 729, 1, 6, 8, 8, "(0,729;1,6) (8,8)"},
      {7, F::zp2_linear, 0, 729, 2, 4, 9, 6, "(0,729;2,4) (9,6)"},
      {7, F::zp2_linear, 0, 729, 3, 2, 13, 5, "(0,729;3,2) (13,5)"},
      {7, F::zp2_linear, 0, 729, 4, 0, 21, 4, "(0,729;4,0) (21,4)"},
      {7, F::sylvester, 2187, 0, 0, 8, 8, 8, "(2187,0;0,8) (8,8)"},
      {7, F::zpzp2_linear, 729, 486, 1, 6, 9, 7, "(729,486;1,6) (9,7)"},
      {7, F::zpzp2_linear, 243, 648, 2, 4, 13, 6, "(243,648;2,4) (13,6)"},
      {7, F::zpzp2_linear, 81, 702, 3, 2, 21, 5, "(81,702;3,2) (21,5)"},

      {8, F::zp2_linear, 0, 2187, 1, 7, 9, 9, "(0,2187;1,7) (9,9)"},
      {8, F::zp2_linear, 0, 2187, 2, 5, 10, 7, "(0,2187;2,5) (10,7)"},
      {8, F::zp2_linear, 0, 2187, 3, 3, 14, 6, "(0,2187;3,3) (14,6)"},
      {8, F::zp2_linear, 0, 2187, 4, 1, 22, 5, "(0,2187;4,1) (22,5)"},
      {8, F::sylvester, 6561, 0, 0, 9, 9, 9, "(6561,0;0,9) (9,9)"},
      {8, F::zpzp2_linear, 2187, 1458, 1, 7, 10, 8, "(2187,1458;1,7) (10,8)"},
      {8, F::zpzp2_linear, 729, 1944, 2, 5, 14, 7, "(729,1944;2,5) (14,7)"},
      {8, F::zpzp2_linear, 243, 2106, 3, 3, 22, 6, "(243,2106;3,3) (22,6)"},
      {8, F::zpzp2_linear, 81, 2160, 4, 1, 35, 5, "(81,2160;4,1) (35,5)"},
  };
}

/// Signature of a tabulated GH code: length 3^t, 3^{t+1} codewords, minimum
/// distance N(p-1)/p and the tabulated (r, k). No weight distribution.
inline InvariantReport reference_report(const ReferenceRow& row, Residue p = 3) {
  InvariantReport rep;
  rep.p = p;
  rep.type = {row.alpha1, row.alpha2, row.t1, row.t2, row.t};
  rep.length = ipow(p, row.t);
  rep.size = ipow(p, row.t + 1);
  rep.min_distance = rep.length * (p - 1) / p;
  rep.rank = row.r;
  rep.kernel_dim = row.k;
  rep.linear = row.r == row.t + 1;
  rep.gh = true;
  return rep;
}

}  // namespace zpzp2

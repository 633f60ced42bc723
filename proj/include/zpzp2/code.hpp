#pragma once

// Additive codes generated by a GeneratorMatrix, their Gray images over Z_p,
// and the GH-code checks (balanced differences, constant translates, minimum
// distance).

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zpzp2/construction.hpp"
#include "zpzp2/errors.hpp"
#include "zpzp2/gray.hpp"
#include "zpzp2/parallel.hpp"
#include "zpzp2/ring.hpp"

namespace zpzp2 {

/// The subgroup of Z_p^a1 x Z_{p^2}^a2 spanned by a generator matrix.
class AdditiveCode {
 public:
  AdditiveCode(GeneratorMatrix gen, std::vector<MixedWord> words)
      : gen_(std::move(gen)), words_(std::move(words)) {}

  const GeneratorMatrix& generator() const noexcept { return gen_; }
  const std::vector<MixedWord>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  Prime prime() const noexcept { return gen_.prime(); }

 private:
  GeneratorMatrix gen_;
  std::vector<MixedWord> words_;
};

/// Codewords sum_i lambda_i row_i, lambda_i in [0, order_i), in mixed-radix
/// order with the first row's coefficient most significant.
inline AdditiveCode enumerate(const GeneratorMatrix& gen, const ComputeOptions& opts = {}) {
  const std::uint64_t size = gen.code_size();
  if (size > opts.max_codewords)
    throw BudgetExceeded("code size exceeds codeword budget", size, opts.max_codewords);

  const auto& rows = gen.rows();
  const auto& orders = gen.row_orders();
  std::vector<MixedWord> words;
  words.reserve(size);
  std::vector<Residue> digits(rows.size(), 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = rows.size(); i-- > 0;) {
      digits[i] = static_cast<Residue>(rest % orders[i]);
      rest /= orders[i];
    }
    MixedWord w(gen.prime(), gen.alpha1(), gen.alpha2());
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (digits[i] != 0) w += rows[i].scaled(digits[i]);
    words.push_back(std::move(w));
  }
  return AdditiveCode(gen, std::move(words));
}

/// A set of vectors over Z_p of common length, stored flat with a hash index.
class GrayCode {
 public:
  enum class Duplicates { reject, merge };

  GrayCode(Prime p, std::size_t length, std::vector<Symbol> flat,
           Duplicates policy = Duplicates::reject)
      : p_(p), n_(length) {
    if (n_ == 0) throw InvalidParameter("code length must be positive");
    if (flat.size() % n_ != 0) throw ShapeMismatch("flat buffer is not a multiple of the length");
    if (std::any_of(flat.begin(), flat.end(), [&](Symbol s) { return s >= p_.value(); }))
      throw InvalidParameter("symbol out of range for Z_p");
    if (policy == Duplicates::merge) {
      std::vector<Symbol> unique;
      unique.reserve(flat.size());
      std::unordered_map<std::string_view, std::size_t> seen;
      const std::size_t count = flat.size() / n_;
      for (std::size_t i = 0; i < count; ++i) {
        if (seen.emplace(view_of(flat, i), i).second)
          unique.insert(unique.end(), flat.begin() + static_cast<std::ptrdiff_t>(i * n_),
                        flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
      }
      flat = std::move(unique);
    }
    data_ = std::move(flat);
    build_index();
  }

  GrayCode(const GrayCode& o) : p_(o.p_), n_(o.n_), data_(o.data_) { build_index(); }
  GrayCode& operator=(const GrayCode& o) {
    if (this != &o) {
      p_ = o.p_;
      n_ = o.n_;
      data_ = o.data_;
      build_index();
    }
    return *this;
  }
  GrayCode(GrayCode&&) noexcept = default;
  GrayCode& operator=(GrayCode&&) noexcept = default;

  Prime prime() const noexcept { return p_; }
  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return data_.size() / n_; }
  std::span<const Symbol> word(std::size_t i) const noexcept {
    return std::span(data_).subspan(i * n_, n_);
  }
  const std::vector<Symbol>& flat() const noexcept { return data_; }

  std::optional<std::size_t> index_of(std::span<const Symbol> v) const {
    if (v.size() != n_) return std::nullopt;
    const auto it = index_.find(as_view(v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(std::span<const Symbol> v) const { return index_of(v).has_value(); }

  bool contains_zero() const { return contains(GrayVector(n_, 0)); }

 private:
  static std::string_view as_view(std::span<const Symbol> v) noexcept {
    return {reinterpret_cast<const char*>(v.data()), v.size()};
  }
  std::string_view view_of(const std::vector<Symbol>& buf, std::size_t i) const noexcept {
    return {reinterpret_cast<const char*>(buf.data()) + i * n_, n_};
  }

  void build_index() {
    index_.clear();
    const std::size_t count = size();
    index_.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
      if (!index_.emplace(view_of(data_, i), i).second)
        throw InvalidParameter("duplicate codeword in Gray code");
  }

  Prime p_;
  std::size_t n_;
  std::vector<Symbol> data_;
  std::unordered_map<std::string_view, std::size_t> index_;
};

/// out = a + b mod p.
inline void add_mod(std::span<const Symbol> a, std::span<const Symbol> b, std::span<Symbol> out,
                    Symbol p) noexcept {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Symbol s = static_cast<Symbol>(a[i] + b[i]);
    out[i] = s >= p ? static_cast<Symbol>(s - p) : s;
  }
}

/// Phi applied to every codeword. Phi is injective, so a duplicate image means
/// the generator rows are dependent and the size claim p^{2t1+t2} is wrong.
inline GrayCode gray_image(const AdditiveCode& code) {
  const auto& gen = code.generator();
  const std::size_t n = gen.gray_length();
  const GrayTable table(gen.prime());
  std::vector<Symbol> flat(code.size() * n);
  for (std::size_t i = 0; i < code.size(); ++i)
    big_phi_into(code.words()[i], table, std::span(flat).subspan(i * n, n));
  try {
    return GrayCode(gen.prime(), n, std::move(flat));
  } catch (const InvalidParameter&) {
    throw std::logic_error("Gray image has fewer codewords than the additive code");
  }
}

/// Number of codewords of each Hamming weight 0..N.
inline std::vector<std::uint64_t> weight_distribution(const GrayCode& g,
                                                      const ComputeOptions& opts = {}) {
  const std::size_t n = g.length();
  const unsigned w = resolve_workers(opts.workers);
  std::vector<std::vector<std::uint64_t>> partial(w, std::vector<std::uint64_t>(n + 1, 0));
  parallel_chunks(g.size(), w, [&](std::size_t b, std::size_t e, unsigned c) {
    for (std::size_t i = b; i < e; ++i) ++partial[c][hamming_weight(g.word(i))];
  });
  std::vector<std::uint64_t> dist(n + 1, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i <= n; ++i) dist[i] += part[i];
  return dist;
}

/// Minimum distance via the minimum nonzero weight (Gray images of additive
/// codes are distance invariant). A seeded sample of pairwise distances is
/// checked against the weight set; a mismatch throws std::logic_error.
inline std::size_t min_distance(const GrayCode& g, const ComputeOptions& opts = {}) {
  if (g.size() < 2) throw InvalidParameter("minimum distance needs at least two codewords");
  const auto dist = weight_distribution(g, opts);
  std::size_t d = 0;
  for (std::size_t w = 1; w < dist.size(); ++w)
    if (dist[w] != 0) {
      d = w;
      break;
    }
  if (d == 0) throw std::logic_error("code has no nonzero codeword");

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (std::size_t s = 0; s < opts.distance_samples; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const std::size_t dij = hamming_distance(g.word(i), g.word(j));
    if (dij < d || dist[dij] == 0)
      throw std::logic_error("sampled distance " + std::to_string(dij) +
                             " is inconsistent with the weight distribution");
  }
  return d;
}

/// Bit planes of a set of vectors: plane[a] has bit j set iff v_j == a.
/// |{j : u_j - v_j = d}| = sum_a popcount(U[a + d] & V[a]).
class BitPlanes {
 public:
  BitPlanes(const GrayCode& g, std::span<const std::size_t> rows)
      : p_(g.prime().value()), words_((g.length() + 63) / 64), count_(rows.size()) {
    bits_.assign(count_ * p_ * words_, 0);
    for (std::size_t r = 0; r < count_; ++r) {
      const auto v = g.word(rows[r]);
      for (std::size_t j = 0; j < v.size(); ++j)
        bits_[(r * p_ + v[j]) * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }

  std::size_t count() const noexcept { return count_; }

  std::size_t difference_count(std::size_t u, std::size_t v, unsigned d) const noexcept {
    std::size_t total = 0;
    for (unsigned a = 0; a < p_; ++a) {
      const std::uint64_t* pu = plane(u, (a + d) % p_);
      const std::uint64_t* pv = plane(v, a);
      for (std::size_t w = 0; w < words_; ++w) total += std::popcount(pu[w] & pv[w]);
    }
    return total;
  }

  /// True when u - v is balanced (every symbol lambda times) or constant.
  bool balanced_or_constant(std::size_t u, std::size_t v, std::size_t n) const noexcept {
    const std::size_t lambda = n / p_;
    const std::size_t c0 = difference_count(u, v, 0);
    if (c0 == lambda) {
      std::size_t seen = c0;
      for (unsigned d = 1; d + 1 < p_; ++d) {
        const std::size_t c = difference_count(u, v, d);
        if (c != lambda) return false;
        seen += c;
      }
      return n - seen == lambda;
    }
    if (c0 != 0) return false;
    for (unsigned d = 1; d < p_; ++d) {
      const std::size_t c = difference_count(u, v, d);
      if (c == n) return true;
      if (c != 0) return false;
    }
    return false;
  }

 private:
  const std::uint64_t* plane(std::size_t r, unsigned a) const noexcept {
    return bits_.data() + (r * p_ + a) * words_;
  }

  unsigned p_;
  std::size_t words_;
  std::size_t count_;
  std::vector<std::uint64_t> bits_;
};

enum class GhCheckMode { full, reduced };

inline const char* to_string(GhCheckMode m) noexcept {
  return m == GhCheckMode::full ? "full" : "reduced";
}

struct GHVerdict {
  bool is_gh = false;
  std::size_t lambda = 0;
  std::optional<std::pair<GrayVector, GrayVector>> witness;
  std::string reason;
  GhCheckMode mode = GhCheckMode::full;
};

namespace detail {

/// First pair (i < j) in lexicographic order whose difference is neither
/// balanced nor constant.
inline std::optional<std::pair<std::size_t, std::size_t>> first_unbalanced_pair(
    const GrayCode& g, std::span<const std::size_t> rows, unsigned workers) {
  const BitPlanes planes(g, rows);
  const std::size_t m = rows.size(), n = g.length();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best_i{kNone};
  std::mutex mu;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  parallel_interleaved(m, workers, [&](unsigned c, unsigned w) {
    for (std::size_t i = c; i < m; i += w) {
      if (i > best_i.load(std::memory_order_relaxed)) return;
      for (std::size_t j = i + 1; j < m; ++j) {
        if (planes.balanced_or_constant(i, j, n)) continue;
        std::lock_guard lock(mu);
        if (!best || std::pair(i, j) < *best) best = std::pair(i, j);
        best_i.store(std::min(best_i.load(), i));
        return;
      }
    }
  });
  if (!best) return std::nullopt;
  return std::pair(rows[best->first], rows[best->second]);
}

}  // namespace detail

/// GH test: |G| = pN, every constant vector is a codeword, and every pair of
/// distinct codewords differs by a constant or a balanced vector.
///
/// When p^2 N^3 exceeds opts.max_symbol_ops the pairwise check runs only on
/// F = {c : c_0 = 0} after verifying |F| = N and G = F + constants, which is
/// equivalent.
inline GHVerdict is_gh_code(const GrayCode& g, const ComputeOptions& opts = {}) {
  GHVerdict v;
  const std::size_t n = g.length();
  const Residue p = g.prime().value();
  if (n % p != 0) {
    v.reason = "length is not a multiple of p";
    return v;
  }
  v.lambda = n / p;
  if (g.size() != std::size_t{p} * n) {
    v.reason = "code size " + std::to_string(g.size()) + " differs from pN = " +
               std::to_string(std::size_t{p} * n);
    return v;
  }
  for (Residue a = 0; a < p; ++a) {
    if (!g.contains(GrayVector(n, static_cast<Symbol>(a)))) {
      v.reason = "constant vector " + std::to_string(a) + " is missing";
      return v;
    }
  }

  const long double ops = static_cast<long double>(p) * p * n * n * static_cast<long double>(n);
  std::vector<std::size_t> rows;
  if (ops <= static_cast<long double>(opts.max_symbol_ops)) {
    v.mode = GhCheckMode::full;
    rows.resize(g.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  } else {
    v.mode = GhCheckMode::reduced;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.word(i)[0] == 0) rows.push_back(i);
    if (rows.size() != n) {
      v.reason = "number of codewords with first coordinate 0 differs from N";
      return v;
    }
    GrayVector tmp(n);
    for (std::size_t r : rows) {
      for (Residue a = 1; a < p; ++a) {
        const auto f = g.word(r);
        for (std::size_t j = 0; j < n; ++j) tmp[j] = static_cast<Symbol>((f[j] + a) % p);
        if (!g.contains(tmp)) {
          v.reason = "code is not a union of constant translates of its normalized rows";
          return v;
        }
      }
    }
  }

  if (const auto bad = detail::first_unbalanced_pair(g, rows, opts.workers)) {
    const auto u = g.word(bad->first), w = g.word(bad->second);
    v.witness = std::pair(GrayVector(u.begin(), u.end()), GrayVector(w.begin(), w.end()));
    v.reason = "difference of a codeword pair is neither balanced nor constant";
    return v;
  }
  v.is_gh = true;
  return v;
}

/// Rows of G with first coordinate 0, sorted lexicographically (zero row first).
inline std::vector<GrayVector> normalized_gh_matrix(const GrayCode& g,
                                                    const ComputeOptions& opts = {}) {
  const auto verdict = is_gh_code(g, opts);
  if (!verdict.is_gh) throw NotGhCode("not a GH code: " + verdict.reason);
  std::vector<GrayVector> rows;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto w = g.word(i);
    if (w[0] == 0) rows.emplace_back(w.begin(), w.end());
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

/// Projections of an additive code onto its two blocks.
struct PuncturedParts {
  std::optional<GrayCode> zp_part;      // first alpha1 coordinates; empty when alpha1 = 0
  std::vector<MixedWord> zp2_part;      // distinct Z_{p^2}-block projections
  std::optional<GrayCode> zp2_image;    // Phi of zp2_part; empty when alpha2 = 0
};

inline PuncturedParts punctured_parts(const AdditiveCode& code) {
  const auto& gen = code.generator();
  const Prime p = gen.prime();
  const std::size_t a1 = gen.alpha1(), a2 = gen.alpha2();
  PuncturedParts parts;

  if (a1 > 0) {
    std::vector<Symbol> flat;
    flat.reserve(code.size() * a1);
    for (const auto& w : code.words())
      for (Residue x : w.zp()) flat.push_back(static_cast<Symbol>(x));
    parts.zp_part.emplace(p, a1, std::move(flat), GrayCode::Duplicates::merge);
  }
  if (a2 > 0) {
    const GrayTable table(p);
    std::vector<Symbol> flat;
    std::vector<MixedWord> projected;
    for (const auto& w : code.words()) projected.emplace_back(p, std::vector<Residue>{}, w.zp2());
    const std::size_t n2 = std::size_t{p.value()} * a2;
    flat.resize(projected.size() * n2);
    for (std::size_t i = 0; i < projected.size(); ++i)
      big_phi_into(projected[i], table, std::span(flat).subspan(i * n2, n2));
    GrayCode image(p, n2, std::move(flat), GrayCode::Duplicates::merge);
    // Phi is injective, so distinct images identify distinct projections.
    std::vector<bool> taken(image.size(), false);
    for (std::size_t i = 0; i < projected.size(); ++i) {
      const std::size_t at = *image.index_of(big_phi(projected[i]));
      if (!taken[at]) {
        taken[at] = true;
        parts.zp2_part.push_back(projected[i]);
      }
    }
    parts.zp2_image.emplace(std::move(image));
  }
  return parts;
}

}  // namespace zpzp2

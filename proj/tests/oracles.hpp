#pragma once

// Brute-force reference implementations used only by tests. Each one follows
// the textbook definition and avoids the library's algorithmic shortcuts.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "zpzp2/zpzp2.hpp"

namespace oracle {

using zpzp2::GrayVector;
using zpzp2::Residue;

/// (u0, u1) times the 2 x p matrix with rows (0, 1, ..., p-1) and (1, ..., 1).
inline GrayVector phi_by_matrix(Residue u, Residue p) {
  const Residue u0 = u % p, u1 = u / p;
  std::vector<std::vector<Residue>> m(2, std::vector<Residue>(p));
  for (Residue j = 0; j < p; ++j) {
    m[0][j] = j;
    m[1][j] = 1;
  }
  GrayVector out(p);
  for (Residue j = 0; j < p; ++j) out[j] = static_cast<std::uint8_t>((u0 * m[0][j] + u1 * m[1][j]) % p);
  return out;
}

inline std::vector<GrayVector> words(const zpzp2::GrayCode& g) {
  std::vector<GrayVector> out;
  for (std::size_t i = 0; i < g.size(); ++i) out.emplace_back(g.word(i).begin(), g.word(i).end());
  return out;
}

inline GrayVector add(const GrayVector& a, const GrayVector& b, Residue p) {
  GrayVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p);
  return s;
}

/// min over all unordered pairs of distinct codewords.
inline std::size_t min_distance_pairwise(const zpzp2::GrayCode& g) {
  std::size_t best = g.length() + 1;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      std::size_t d = 0;
      for (std::size_t k = 0; k < g.length(); ++k) d += g.word(i)[k] != g.word(j)[k];
      best = std::min(best, d);
    }
  return best;
}

/// Closure of the code under addition (which over Z_p includes scalar
/// multiples). Its size is p^rank.
inline std::set<GrayVector> additive_closure(const zpzp2::GrayCode& g) {
  const Residue p = g.prime().value();
  std::set<GrayVector> span{GrayVector(g.length(), 0)};
  const auto gens = words(g);
  std::vector<GrayVector> frontier(span.begin(), span.end());
  while (!frontier.empty()) {
    std::vector<GrayVector> next;
    for (const auto& v : frontier)
      for (const auto& w : gens) {
        auto s = add(v, w, p);
        if (span.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return span;
}

inline unsigned rank_by_closure(const zpzp2::GrayCode& g) {
  const auto n = additive_closure(g).size();
  return static_cast<unsigned>(zpzp2::exact_log(n, g.prime().value()));
}

/// Kernel over the whole space Z_p^n: every x with x + C = C. Needs p^n small.
inline std::vector<GrayVector> kernel_full_space(const zpzp2::GrayCode& g) {
  const Residue p = g.prime().value();
  const std::size_t n = g.length();
  const auto code = words(g);
  std::vector<GrayVector> out;
  GrayVector x(n, 0);
  while (true) {
    bool inv = true;
    for (const auto& c : code)
      if (!g.contains(add(x, c, p))) {
        inv = false;
        break;
      }
    if (inv) out.push_back(x);
    std::size_t k = 0;
    while (k < n && ++x[k] == p) x[k++] = 0;
    if (k == n) break;
  }
  return out;
}

/// Subgroup generated by the rows, by closure (no mixed-radix enumeration).
inline std::set<std::pair<std::vector<Residue>, std::vector<Residue>>> subgroup_closure(
    const zpzp2::GeneratorMatrix& gen) {
  using Key = std::pair<std::vector<Residue>, std::vector<Residue>>;
  const zpzp2::MixedWord zero(gen.prime(), gen.alpha1(), gen.alpha2());
  std::set<Key> seen{{zero.zp(), zero.zp2()}};
  std::vector<zpzp2::MixedWord> frontier{zero};
  while (!frontier.empty()) {
    std::vector<zpzp2::MixedWord> next;
    for (const auto& w : frontier)
      for (const auto& r : gen.rows()) {
        auto s = w + r;
        if (seen.insert({s.zp(), s.zp2()}).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return seen;
}

/// GH property straight from the definition, with byte-wise tallies.
inline bool is_gh_by_definition(const zpzp2::GrayCode& g) {
  const Residue p = g.prime().value();
  const std::size_t n = g.length();
  if (n % p != 0 || g.size() != p * n) return false;
  for (Residue a = 0; a < p; ++a)
    if (!g.contains(GrayVector(n, static_cast<std::uint8_t>(a)))) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      std::vector<std::size_t> tally(p, 0);
      for (std::size_t k = 0; k < n; ++k) ++tally[(g.word(i)[k] + p - g.word(j)[k]) % p];
      bool balanced = true, constant = false;
      for (Residue a = 0; a < p; ++a) {
        balanced = balanced && tally[a] == n / p;
        constant = constant || tally[a] == n;
      }
      if (!balanced && !constant) return false;
    }
  return true;
}

}  // namespace oracle

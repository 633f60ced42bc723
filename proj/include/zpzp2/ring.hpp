#pragma once

// Arithmetic over Z_p and Z_{p^2}: p-ary expansion, element order, the digit
// carry operation, and mixed words in Z_p^a1 x Z_{p^2}^a2.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zpzp2/errors.hpp"

namespace zpzp2 {

using Residue = std::uint32_t;

/// A validated prime. Gray symbols are stored one per byte, so p <= 251.
class Prime {
 public:
  static constexpr Residue kMax = 251;

  constexpr explicit Prime(Residue p) : p_(p) {
    if (p < 2 || p > kMax || !is_prime(p)) reject(p);
  }

  constexpr Residue value() const noexcept { return p_; }
  constexpr Residue square() const noexcept { return p_ * p_; }
  constexpr operator Residue() const noexcept { return p_; }

  friend constexpr bool operator==(Prime a, Prime b) noexcept { return a.p_ == b.p_; }

  static constexpr bool is_prime(Residue n) noexcept {
    if (n < 2) return false;
    for (Residue d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  [[noreturn]] static void reject(Residue p) {
    throw InvalidParameter("p must be a prime in [2, " + std::to_string(kMax) + "], got " +
                           std::to_string(p));
  }

  Residue p_;
};

/// u = u0 + u1 * p with both digits in [0, p).
struct PAryExpansion {
  Residue u0 = 0;
  Residue u1 = 0;

  friend constexpr bool operator==(const PAryExpansion&, const PAryExpansion&) = default;
};

constexpr PAryExpansion expand(Residue u, Prime p) noexcept {
  assert(u < p.square());
  return {u % p.value(), u / p.value()};
}

constexpr Residue compose(PAryExpansion e, Prime p) noexcept { return e.u0 + e.u1 * p.value(); }

/// Additive order of u in Z_{p^2}: 1, p or p^2.
constexpr Residue order(Residue u, Prime p) noexcept {
  if (u == 0) return 1;
  return u % p.value() == 0 ? p.value() : p.square();
}

/// u (.)_p v: digit i of the result is 1 iff u_i + v_i >= p.
constexpr Residue odot(Residue u, Residue v, Prime p) noexcept {
  const auto a = expand(u, p);
  const auto b = expand(v, p);
  const Residue t0 = a.u0 + b.u0 >= p.value() ? 1 : 0;
  const Residue t1 = a.u1 + b.u1 >= p.value() ? 1 : 0;
  return t0 + t1 * p.value();
}

/// An element (x | y) of Z_p^a1 x Z_{p^2}^a2.
class MixedWord {
 public:
  MixedWord(Prime p, std::size_t alpha1, std::size_t alpha2)
      : p_(p), zp_(alpha1, 0), zp2_(alpha2, 0) {}

  MixedWord(Prime p, std::vector<Residue> zp, std::vector<Residue> zp2)
      : p_(p), zp_(std::move(zp)), zp2_(std::move(zp2)) {
    if (std::any_of(zp_.begin(), zp_.end(), [&](Residue x) { return x >= p_.value(); }))
      throw InvalidParameter("Z_p coordinate out of range");
    if (std::any_of(zp2_.begin(), zp2_.end(), [&](Residue x) { return x >= p_.square(); }))
      throw InvalidParameter("Z_{p^2} coordinate out of range");
  }

  Prime prime() const noexcept { return p_; }
  std::size_t alpha1() const noexcept { return zp_.size(); }
  std::size_t alpha2() const noexcept { return zp2_.size(); }
  const std::vector<Residue>& zp() const noexcept { return zp_; }
  const std::vector<Residue>& zp2() const noexcept { return zp2_; }

  bool is_zero() const noexcept {
    auto nz = [](Residue x) { return x != 0; };
    return std::none_of(zp_.begin(), zp_.end(), nz) && std::none_of(zp2_.begin(), zp2_.end(), nz);
  }

  /// Order of the word in the group: max coordinate order.
  Residue order() const noexcept {
    Residue o = 1;
    for (Residue x : zp_)
      if (x != 0) o = std::max(o, p_.value());
    for (Residue x : zp2_) o = std::max(o, zpzp2::order(x, p_));
    return o;
  }

  MixedWord& operator+=(const MixedWord& rhs) {
    check_shape(rhs);
    const Residue p = p_.value(), q = p_.square();
    for (std::size_t i = 0; i < zp_.size(); ++i) zp_[i] = (zp_[i] + rhs.zp_[i]) % p;
    for (std::size_t i = 0; i < zp2_.size(); ++i) zp2_[i] = (zp2_[i] + rhs.zp2_[i]) % q;
    return *this;
  }

  MixedWord& operator-=(const MixedWord& rhs) { return *this += -rhs; }

  MixedWord operator-() const {
    MixedWord r = *this;
    const Residue p = p_.value(), q = p_.square();
    for (auto& x : r.zp_) x = (p - x) % p;
    for (auto& x : r.zp2_) x = (q - x) % q;
    return r;
  }

  /// lambda in [0, p^2) acts mod p on the Z_p block and mod p^2 on the Z_{p^2} block.
  MixedWord scaled(Residue lambda) const {
    MixedWord r = *this;
    const std::uint64_t p = p_.value(), q = p_.square();
    for (auto& x : r.zp_) x = static_cast<Residue>((lambda % p) * std::uint64_t{x} % p);
    for (auto& x : r.zp2_) x = static_cast<Residue>((lambda % q) * std::uint64_t{x} % q);
    return r;
  }

  friend MixedWord operator+(MixedWord a, const MixedWord& b) { return a += b; }
  friend MixedWord operator-(MixedWord a, const MixedWord& b) { return a -= b; }
  friend MixedWord operator*(Residue lambda, const MixedWord& w) { return w.scaled(lambda); }

  friend bool operator==(const MixedWord& a, const MixedWord& b) {
    return a.p_ == b.p_ && a.zp_ == b.zp_ && a.zp2_ == b.zp2_;
  }

  void check_shape(const MixedWord& rhs) const {
    if (!(p_ == rhs.p_) || zp_.size() != rhs.zp_.size() || zp2_.size() != rhs.zp2_.size())
      throw ShapeMismatch("mixed words differ in (p, alpha1, alpha2)");
  }

 private:
  Prime p_;
  std::vector<Residue> zp_;
  std::vector<Residue> zp2_;
};

/// p^e, with overflow guarded by the caller's budgets.
constexpr std::uint64_t ipow(std::uint64_t base, unsigned e) noexcept {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

/// Exact log_p of n; returns -1 when n is not a power of p.
constexpr int exact_log(std::uint64_t n, Residue p) noexcept {
  if (n == 0) return -1;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return n == 1 ? e : -1;
}

}  // namespace zpzp2

#pragma once

// Generalized Carlet Gray map phi: Z_{p^2} -> Z_p^p, its coordinate-wise
// extension Phi, and the Hamming / homogeneous metrics.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zpzp2/errors.hpp"
#include "zpzp2/ring.hpp"

namespace zpzp2 {

using Symbol = std::uint8_t;
using GrayVector = std::vector<Symbol>;

/// phi(u) written into out[0..p): u0 * (0, 1, ..., p-1) + u1 * (1, ..., 1) mod p.
inline void phi_into(Residue u, Prime p, std::span<Symbol> out) noexcept {
  const auto [u0, u1] = expand(u, p);
  for (Residue j = 0; j < p.value(); ++j) out[j] = static_cast<Symbol>((u0 * j + u1) % p.value());
}

inline GrayVector phi(Residue u, Prime p) {
  GrayVector v(p.value());
  phi_into(u, p, v);
  return v;
}

/// All p^2 images of phi, for hot loops.
class GrayTable {
 public:
  explicit GrayTable(Prime p) : p_(p), images_(std::size_t{p.square()} * p.value()) {
    for (Residue u = 0; u < p.square(); ++u)
      phi_into(u, p, std::span(images_).subspan(std::size_t{u} * p.value(), p.value()));
  }

  Prime prime() const noexcept { return p_; }

  std::span<const Symbol> operator[](Residue u) const noexcept {
    return std::span(images_).subspan(std::size_t{u} * p_.value(), p_.value());
  }

 private:
  Prime p_;
  std::vector<Symbol> images_;
};

inline std::size_t gray_length(const MixedWord& w) noexcept {
  return w.alpha1() + std::size_t{w.prime().value()} * w.alpha2();
}

/// Phi(x | y) = (x, phi(y_1), ..., phi(y_a2)) written into out.
inline void big_phi_into(const MixedWord& w, const GrayTable& table, std::span<Symbol> out) {
  const std::size_t p = w.prime().value();
  std::size_t pos = 0;
  for (Residue x : w.zp()) out[pos++] = static_cast<Symbol>(x);
  for (Residue y : w.zp2()) {
    const auto img = table[y];
    std::copy(img.begin(), img.end(), out.begin() + static_cast<std::ptrdiff_t>(pos));
    pos += p;
  }
}

inline GrayVector big_phi(const MixedWord& w) {
  GrayVector v(gray_length(w));
  big_phi_into(w, GrayTable(w.prime()), v);
  return v;
}

/// Preimage of a length-p vector under phi, or nullopt when v is not in the image.
inline std::optional<Residue> phi_inverse(std::span<const Symbol> v, Prime p) {
  if (v.size() != p.value()) throw ShapeMismatch("phi_inverse expects a vector of length p");
  const Residue u1 = v[0];
  if (u1 >= p.value()) return std::nullopt;
  const Residue u0 = (v[1] + p.value() - u1) % p.value();
  const Residue u = compose({u0, u1}, p);
  for (Residue j = 0; j < p.value(); ++j)
    if (v[j] != (u0 * j + u1) % p.value()) return std::nullopt;
  return u;
}

inline std::size_t hamming_weight(std::span<const Symbol> v) noexcept {
  std::size_t w = 0;
  for (Symbol s : v) w += s != 0;
  return w;
}

inline std::size_t hamming_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) throw ShapeMismatch("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

/// Homogeneous weight on Z_{p^2}: 0, p on pZ_{p^2} \ {0}, p - 1 otherwise.
constexpr std::size_t hom_weight(Residue u, Prime p) noexcept {
  if (u == 0) return 0;
  return u % p.value() == 0 ? p.value() : p.value() - 1;
}

/// Hamming weight of the Z_p block plus homogeneous weight of the Z_{p^2} block.
inline std::size_t hom_weight(const MixedWord& w) noexcept {
  std::size_t total = 0;
  for (Residue x : w.zp()) total += x != 0;
  for (Residue y : w.zp2()) total += hom_weight(y, w.prime());
  return total;
}

/// d*(u, v) = wt_H(x - x') + wt*(y - y'), computed coordinate-wise.
inline std::size_t hom_distance(const MixedWord& u, const MixedWord& v) {
  u.check_shape(v);
  const Prime p = u.prime();
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.alpha1(); ++i) d += u.zp()[i] != v.zp()[i];
  for (std::size_t i = 0; i < u.alpha2(); ++i) {
    const Residue diff = (u.zp2()[i] + p.square() - v.zp2()[i]) % p.square();
    d += hom_weight(diff, p);
  }
  return d;
}

}  // namespace zpzp2

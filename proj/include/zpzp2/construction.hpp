#pragma once

// Recursive generator matrices A_p^{t1,t2} of Z_pZ_{p^2}-additive GH codes,
// the variant family A_{p,a}^{1,1}, and the Sylvester (alpha2 = 0) codes.
//
// Column layout follows the printed matrices: blocks are laid out left to
// right with the new-row labels increasing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zpzp2/errors.hpp"
#include "zpzp2/ring.hpp"

namespace zpzp2 {

/// Type (alpha1, alpha2; t1, t2) plus the length exponent t = 2 t1 + t2 - 1.
struct CodeType {
  std::size_t alpha1 = 0;
  std::size_t alpha2 = 0;
  unsigned t1 = 0;
  unsigned t2 = 0;
  unsigned t = 0;

  friend bool operator==(const CodeType&, const CodeType&) = default;

  std::string to_string() const {
    return "(" + std::to_string(alpha1) + "," + std::to_string(alpha2) + ";" + std::to_string(t1) +
           "," + std::to_string(t2) + ")";
  }
};

/// Closed-form type. t1 = 0 is the Sylvester case (alpha2 = 0).
/// Both parametrisations of (alpha1, alpha2) are evaluated and must agree.
inline CodeType code_type(Prime p, unsigned t1, unsigned t2) {
  if (t2 < 1) throw InvalidParameter("t2 must be >= 1");
  const std::uint64_t q = p.value();
  CodeType ct;
  ct.t1 = t1;
  ct.t2 = t2;
  ct.t = 2 * t1 + t2 - 1;
  ct.alpha1 = ipow(q, t1 + t2 - 1);
  std::uint64_t sum = 0;
  for (unsigned i = 1; i <= t1; ++i) sum += ipow(q, t1 + t2 + i - 3);
  ct.alpha2 = (q - 1) * sum;

  const std::uint64_t a1 = ipow(q, ct.t - t1);
  const std::uint64_t a2 = t1 == 0 ? 0 : ipow(q, ct.t - 1) - ipow(q, ct.t - t1 - 1);
  if (a1 != ct.alpha1 || a2 != ct.alpha2)
    throw std::logic_error("type formulas disagree for " + ct.to_string());
  return ct;
}

class GeneratorMatrix {
 public:
  GeneratorMatrix(Prime p, std::size_t alpha1, std::size_t alpha2, std::vector<MixedWord> rows)
      : p_(p), alpha1_(alpha1), alpha2_(alpha2), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
      if (!(r.prime() == p_) || r.alpha1() != alpha1_ || r.alpha2() != alpha2_)
        throw ShapeMismatch("generator row shape differs from (p, alpha1, alpha2)");
      const Residue o = r.order();
      if (o == 1) throw InvalidParameter("generator rows must be nonzero");
      orders_.push_back(o);
    }
  }

  Prime prime() const noexcept { return p_; }
  std::size_t alpha1() const noexcept { return alpha1_; }
  std::size_t alpha2() const noexcept { return alpha2_; }
  std::size_t gray_length() const noexcept { return alpha1_ + p_.value() * alpha2_; }
  const std::vector<MixedWord>& rows() const noexcept { return rows_; }
  const std::vector<Residue>& row_orders() const noexcept { return orders_; }

  unsigned t1() const noexcept {
    return static_cast<unsigned>(std::count(orders_.begin(), orders_.end(), p_.square()));
  }
  unsigned t2() const noexcept {
    return static_cast<unsigned>(std::count(orders_.begin(), orders_.end(), p_.value()));
  }

  CodeType type() const noexcept {
    return {alpha1_, alpha2_, t1(), t2(), 2 * t1() + t2() - 1};
  }

  /// Number of codewords generated: product of the row orders.
  std::uint64_t code_size() const noexcept {
    std::uint64_t s = 1;
    for (Residue o : orders_) s *= o;
    return s;
  }

  /// True when the first row is (1 | p).
  bool starts_with_ones_row() const {
    if (rows_.empty()) return false;
    const auto& r = rows_.front();
    return std::all_of(r.zp().begin(), r.zp().end(), [](Residue x) { return x == 1; }) &&
           std::all_of(r.zp2().begin(), r.zp2().end(), [&](Residue x) { return x == p_.value(); });
  }

  friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    return a.p_ == b.p_ && a.alpha1_ == b.alpha1_ && a.alpha2_ == b.alpha2_ && a.rows_ == b.rows_;
  }

 private:
  Prime p_;
  std::size_t alpha1_;
  std::size_t alpha2_;
  std::vector<MixedWord> rows_;
  std::vector<Residue> orders_;
};

namespace detail {

inline void require_recursive_form(const GeneratorMatrix& a) {
  if (!a.starts_with_ones_row())
    throw InvalidParameter("matrix does not start with the (1 | p) row");
}

}  // namespace detail

/// True when {p * a_i mod p^2} is exactly pZ_{p^2} \ {0}.
inline bool is_valid_variant(Prime p, const std::vector<Residue>& a) {
  if (a.size() != p.value() - 1) return false;
  std::vector<bool> seen(p.value(), false);
  for (Residue ai : a) {
    if (ai >= p.square()) return false;
    const Residue j = (p.value() * ai % p.square()) / p.value();
    if (j == 0 || seen[j]) return false;
    seen[j] = true;
  }
  return true;
}

/// A_{p,a}^{1,1}: rows (1 | p) and (0, 1, ..., p-1 | a_1, ..., a_{p-1}).
inline GeneratorMatrix build_A11_variant(Prime p, const std::vector<Residue>& a) {
  if (!is_valid_variant(p, a))
    throw InvalidParameter("invalid variant vector a: {p*a_i} must equal pZ_{p^2} \\ {0}");
  const Residue q = p.value();
  std::vector<Residue> ones(q, 1), labels(q);
  for (Residue j = 0; j < q; ++j) labels[j] = j;
  std::vector<MixedWord> rows;
  rows.emplace_back(p, std::move(ones), std::vector<Residue>(q - 1, q));
  rows.emplace_back(p, std::move(labels), a);
  return GeneratorMatrix(p, q, q - 1, std::move(rows));
}

inline GeneratorMatrix build_A11(Prime p) {
  std::vector<Residue> a(p.value() - 1);
  for (Residue i = 0; i < a.size(); ++i) a[i] = i + 1;
  return build_A11_variant(p, a);
}

/// A_p^{t1,t2} -> A_p^{t1,t2+1}: p copies of each block, new row of order p
/// (labels j on the Z_p copies, p*j on the Z_{p^2} copies) appended last.
inline GeneratorMatrix extend_order_p(const GeneratorMatrix& a) {
  detail::require_recursive_form(a);
  const Prime p = a.prime();
  const Residue q = p.value();
  const std::size_t a1 = a.alpha1(), a2 = a.alpha2();

  std::vector<MixedWord> rows;
  rows.reserve(a.rows().size() + 1);
  for (const auto& r : a.rows()) {
    std::vector<Residue> zp, zp2;
    zp.reserve(q * a1);
    zp2.reserve(q * a2);
    for (Residue j = 0; j < q; ++j) {
      zp.insert(zp.end(), r.zp().begin(), r.zp().end());
      zp2.insert(zp2.end(), r.zp2().begin(), r.zp2().end());
    }
    rows.emplace_back(p, std::move(zp), std::move(zp2));
  }
  std::vector<Residue> zp, zp2;
  zp.reserve(q * a1);
  zp2.reserve(q * a2);
  for (Residue j = 0; j < q; ++j) {
    zp.insert(zp.end(), a1, j);
    zp2.insert(zp2.end(), a2, q * j);
  }
  rows.emplace_back(p, std::move(zp), std::move(zp2));
  return GeneratorMatrix(p, q * a1, q * a2, std::move(rows));
}

/// A_p^{t1,t2} -> A_p^{t1+1,t2}. The Z_{p^2} block is (p-1) copies of p*A_1
/// (labels 1..p-1) followed by p^2 copies of A_2 (labels 0..p^2-1).
/// Order-p^2 extensions come first, so the input must still have t2 = 1.
inline GeneratorMatrix extend_order_p2(const GeneratorMatrix& a) {
  detail::require_recursive_form(a);
  if (a.t2() != 1)
    throw InvalidParameter("order-p^2 rows must be added before order-p rows (t2 must be 1)");
  const Prime p = a.prime();
  const Residue q = p.value(), q2 = p.square();
  const std::size_t a1 = a.alpha1(), a2 = a.alpha2();
  const std::size_t new_a2 = (q - 1) * a1 + std::size_t{q2} * a2;

  std::vector<MixedWord> rows;
  rows.reserve(a.rows().size() + 1);
  for (const auto& r : a.rows()) {
    std::vector<Residue> zp, zp2;
    zp.reserve(q * a1);
    zp2.reserve(new_a2);
    for (Residue j = 0; j < q; ++j) zp.insert(zp.end(), r.zp().begin(), r.zp().end());
    for (Residue j = 1; j < q; ++j)
      for (Residue x : r.zp()) zp2.push_back(q * x % q2);
    for (Residue j = 0; j < q2; ++j) zp2.insert(zp2.end(), r.zp2().begin(), r.zp2().end());
    rows.emplace_back(p, std::move(zp), std::move(zp2));
  }
  std::vector<Residue> zp, zp2;
  zp.reserve(q * a1);
  zp2.reserve(new_a2);
  for (Residue j = 0; j < q; ++j) zp.insert(zp.end(), a1, j);
  for (Residue j = 1; j < q; ++j) zp2.insert(zp2.end(), a1, j);
  for (Residue j = 0; j < q2; ++j) zp2.insert(zp2.end(), a2, j);
  rows.emplace_back(p, std::move(zp), std::move(zp2));
  return GeneratorMatrix(p, q * a1, new_a2, std::move(rows));
}

/// A_{p,a}^{t1,t2}: t1-1 order-p^2 extensions of the starting matrix, then
/// t2-1 order-p extensions. Without a, the canonical a = (1, ..., p-1).
inline GeneratorMatrix build_A(Prime p, unsigned t1, unsigned t2,
                               const std::optional<std::vector<Residue>>& a = std::nullopt) {
  if (t1 < 1 || t2 < 1) throw InvalidParameter("t1 and t2 must both be >= 1");
  GeneratorMatrix m = a ? build_A11_variant(p, *a) : build_A11(p);
  for (unsigned i = 1; i < t1; ++i) m = extend_order_p2(m);
  for (unsigned i = 1; i < t2; ++i) m = extend_order_p(m);
  return m;
}

/// All valid a with p*a_i increasing, i.e. a_i = i + p*x_i; listed with a_1 most significant.
inline std::vector<std::vector<Residue>> enumerate_valid_a(Prime p) {
  const Residue q = p.value();
  const std::size_t k = q - 1;
  const std::uint64_t count = ipow(q, static_cast<unsigned>(k));
  std::vector<std::vector<Residue>> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Residue> a(k);
    std::uint64_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      a[i] = static_cast<Residue>(i + 1 + q * (rest % q));
      rest /= q;
    }
    out.push_back(std::move(a));
  }
  return out;
}

/// Linear GH code of type (p^{t2-1}, 0; 0, t2): the all-ones row plus t2-1 rows
/// listing the coordinates of Z_p^{t2-1} (leftmost coordinate most significant).
inline GeneratorMatrix build_sylvester(Prime p, unsigned t2) {
  if (t2 < 1) throw InvalidParameter("t2 must be >= 1");
  const Residue q = p.value();
  const std::size_t n = ipow(q, t2 - 1);
  std::vector<MixedWord> rows;
  rows.emplace_back(p, std::vector<Residue>(n, 1), std::vector<Residue>{});
  for (unsigned i = 1; i < t2; ++i) {
    const std::uint64_t stride = ipow(q, t2 - 1 - i);
    std::vector<Residue> zp(n);
    for (std::size_t j = 0; j < n; ++j) zp[j] = static_cast<Residue>((j / stride) % q);
    rows.emplace_back(p, std::move(zp), std::vector<Residue>{});
  }
  return GeneratorMatrix(p, n, 0, std::move(rows));
}

}  // namespace zpzp2

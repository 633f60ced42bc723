// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zpzp2/zpzp2.hpp"

using namespace zpzp2;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

using Check = std::function<void(Outcome&)>;

GrayVector add(const GrayVector& a, const GrayVector& b, Residue p) {
  GrayVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = static_cast<Symbol>((a[i] + b[i]) % p);
  return s;
}

GrayVector sub(const GrayVector& a, const GrayVector& b, Residue p) {
  GrayVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = static_cast<Symbol>((a[i] + p - b[i]) % p);
  return s;
}

GrayVector scale(Residue l, GrayVector v, Residue p) {
  for (auto& s : v) s = static_cast<Symbol>(l * s % p);
  return v;
}

GrayVector constant(Residue p, Residue c) { return GrayVector(p, static_cast<Symbol>(c)); }

GrayCode gh(Residue p, unsigned t1, unsigned t2, const ComputeOptions& opts = {}) {
  return gray_image(enumerate(build_A(Prime(p), t1, t2), opts));
}

std::string shape(Residue p, unsigned t1, unsigned t2) {
  return "p=" + std::to_string(p) + " (t1,t2)=(" + std::to_string(t1) + "," + std::to_string(t2) + ")";
}

// 1. Gray-map identities, exhaustive over Z_{p^2}.
void gray_identities(Outcome& o) {
  for (Residue q : {2u, 3u, 5u, 7u}) {
    const Prime p(q);
    const Residue q2 = p.square();
    const std::string at = " fails for p=" + std::to_string(q);
    for (Residue u = 0; u < q2; ++u) {
      o.require(hom_weight(u, p) == hamming_weight(phi(u, p)), "homogeneous weight" + at);
      for (Residue l = 0; l < q; ++l)
        o.require(phi((u + l * q) % q2, p) == add(phi(u, p), constant(q, l), q),
                  "translation by lambda*p" + at);
      for (Residue v = 0; v < q2; ++v) {
        const auto pu = phi(u, p), pv = phi(v, p);
        const Residue carry_arg = (u + v + q2 * q - q * odot(u, v, p)) % q2;
        o.require(add(pu, pv, q) == phi(carry_arg, p), "carry-corrected sum" + at);
        o.require(phi((q * u + v) % q2, p) == add(phi(q * u % q2, p), pv, q), "split of p*u" + at);
        const Residue t0 = (u % q + v % q) >= q ? 1 : 0;
        o.require(phi((u + v) % q2, p) == add(add(pu, pv, q), constant(q, t0), q),
                  "low-digit carry" + at);
        o.require(hamming_distance(pu, pv) == hamming_weight(phi((u + q2 - v) % q2, p)),
                  "distance invariance" + at);
        if (u != v) {
          const auto d = sub(pu, pv, q);
          const Residue diff = (u + q2 - v) % q2;
          if (diff % q == 0) {
            o.require(d == constant(q, diff / q), "constant difference" + at);
          } else {
            std::vector<int> seen(q, 0);
            for (Symbol s : d) ++seen[s];
            for (Residue a = 0; a < q; ++a) o.require(seen[a] == 1, "balanced difference" + at);
          }
        }
      }
    }
    for (Residue l = 0; l < q; ++l)
      for (Residue m = 0; m < q; ++m)
        o.require(phi(l * m * q % q2, p) == scale(l * m % q, phi(q, p), q), "scalar on pZ" + at);
  }
}

// 2. Printed generator matrices.
void printed_matrices(Outcome& o) {
  const Prime p(3);
  o.require(io::to_text(build_A(p, 1, 1)) == "1 1 1 | 3 3\n0 1 2 | 1 2\n", "A_3^{1,1} differs");
  o.require(io::to_text(build_A(p, 1, 2)) ==
                "1 1 1 1 1 1 1 1 1 | 3 3 3 3 3 3\n"
                "0 1 2 0 1 2 0 1 2 | 1 2 1 2 1 2\n"
                "0 0 0 1 1 1 2 2 2 | 0 0 3 3 6 6\n",
            "A_3^{1,2} differs");
  const auto m = build_A(p, 2, 1);
  o.require(m.alpha1() == 9 && m.alpha2() == 24, "A_3^{2,1} has the wrong shape");
  if (!o.pass) return;
  const std::vector<std::vector<Residue>> zp{
      {1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 1, 2, 0, 1, 2, 0, 1, 2}, {0, 0, 0, 1, 1, 1, 2, 2, 2}};
  const std::vector<std::vector<Residue>> head{
      {3, 3, 3, 3, 3, 3, 3, 3, 3, 3}, {0, 3, 6, 0, 3, 6, 1, 2, 1, 2}, {1, 1, 1, 2, 2, 2, 0, 0, 1, 1}};
  const std::vector<std::vector<Residue>> tail{{3, 3}, {1, 2}, {8, 8}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& r = m.rows()[i];
    o.require(r.zp() == zp[i], "A_3^{2,1} Z_3 block row " + std::to_string(i));
    o.require(std::vector<Residue>(r.zp2().begin(), r.zp2().begin() + 10) == head[i],
              "A_3^{2,1} leading Z_9 columns row " + std::to_string(i));
    o.require(std::vector<Residue>(r.zp2().end() - 2, r.zp2().end()) == tail[i],
              "A_3^{2,1} trailing Z_9 columns row " + std::to_string(i));
  }
}

// 3. Normalized GH matrix of Phi(H_3^{1,1}).
void printed_h33(Outcome& o) {
  const std::set<GrayVector> printed{
      {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 2, 0, 1, 2, 0, 2, 1}, {0, 2, 1, 0, 2, 1, 1, 2, 0},
      {0, 0, 0, 1, 1, 1, 2, 2, 2}, {0, 1, 2, 1, 2, 0, 2, 1, 0}, {0, 2, 1, 1, 0, 2, 0, 1, 2},
      {0, 0, 0, 2, 2, 2, 1, 1, 1}, {0, 1, 2, 2, 0, 1, 1, 0, 2}, {0, 2, 1, 2, 1, 0, 2, 0, 1}};
  const auto rows = normalized_gh_matrix(gh(3, 1, 1));
  o.require(rows.size() == 9, "H(3,3) has the wrong number of rows");
  o.require(std::set<GrayVector>(rows.begin(), rows.end()) == printed, "H(3,3) row set differs");
}

// 4. GH property and minimum distance.
void gh_family(Outcome& o) {
  std::vector<std::pair<Residue, std::pair<unsigned, unsigned>>> cases;
  for (Residue q : {2u, 3u, 5u})
    for (unsigned t1 = 1; 2 * t1 <= 5; ++t1)
      for (unsigned t2 = 1; 2 * t1 + t2 - 1 <= 5; ++t2) cases.push_back({q, {t1, t2}});
  for (const auto& s : types_of_length(6)) cases.push_back({3, s});
  for (const auto& [q, s] : cases) {
    const auto g = gh(q, s.first, s.second);
    const auto v = is_gh_code(g);
    o.require(v.is_gh, shape(q, s.first, s.second) + " is not GH (" + v.reason + ")");
    o.require(min_distance(g) * q == g.length() * (q - 1),
              shape(q, s.first, s.second) + " minimum distance differs from N(p-1)/p");
  }
}

// 5 and 9 share one classification run for p = 3, t = 2..6.
const ClassificationTable& table_t2_t6() {
  static const ClassificationTable table = classify(Prime(3), 2, 6);
  return table;
}

void golden_table(Outcome& o) {
  struct Golden {
    unsigned t, t1, t2, r, k;
  };
  const std::vector<Golden> golden{
      {2, 1, 1, 4, 2},  {3, 1, 2, 5, 3},  {4, 1, 3, 6, 4},  {4, 2, 1, 10, 3}, {5, 1, 4, 7, 5},
      {5, 2, 2, 11, 4}, {6, 1, 5, 8, 6},  {6, 2, 3, 12, 5}, {6, 3, 1, 20, 4}, {2, 0, 3, 3, 3},
      {3, 0, 4, 4, 4},  {4, 0, 5, 5, 5},  {5, 0, 6, 6, 6},  {6, 0, 7, 7, 7}};
  const auto& table = table_t2_t6();
  for (const auto& g : golden) {
    bool found = false;
    for (const auto& row : table.rows) {
      if (row.t != g.t || row.type.t1 != g.t1 || row.type.t2 != g.t2) continue;
      found = true;
      const std::string label = "t=" + std::to_string(g.t) + " " + row.type.to_string();
      o.require(row.computed.has_value(), label + " was skipped");
      if (row.computed)
        o.require(row.computed->rank == g.r && row.computed->kernel_dim == g.k,
                  label + " computed (" + std::to_string(row.computed->rank) + "," +
                      std::to_string(row.computed->kernel_dim) + ")");
    }
    o.require(found, "row t=" + std::to_string(g.t) + " missing");
  }
  for (const auto& row : table.rows)
    o.require(row.status == RowStatus::pass, "t=" + std::to_string(row.t) + " " +
                                                 row.type.to_string() + " status " +
                                                 to_string(row.status));
}

// 6. Non-linearity with a concrete witness.
void nonlinearity(Outcome& o) {
  const auto h11 = gh(3, 1, 1);
  o.require(is_nonlinearity_witness(h11, GrayVector{0, 1, 2, 0, 1, 2, 0, 2, 1},
                                    GrayVector{0, 2, 1, 0, 2, 1, 1, 2, 0}),
            "printed witness for H_3^{1,1} rejected");
  for (Residue q : {3u, 5u})
    for (unsigned t1 = 1; 2 * t1 <= 6; ++t1)
      for (unsigned t2 = 1; 2 * t1 + t2 - 1 <= (q == 3 ? 6u : 5u); ++t2) {
        const auto g = gh(q, t1, t2);
        o.require(!is_linear(g), shape(q, t1, t2) + " reported linear");
        const auto w = nonlinearity_witness(g);
        o.require(w && is_nonlinearity_witness(g, w->first, w->second),
                  shape(q, t1, t2) + " has no valid witness");
      }
}

// 7. Linearity edge cases.
void linearity_edges(Outcome& o) {
  for (Residue q : {2u, 3u, 5u})
    for (unsigned t2 = 2; t2 <= (q == 5 ? 5u : 7u); ++t2) {
      const auto g = gray_image(enumerate(build_sylvester(Prime(q), t2)));
      o.require(is_linear(g), "Sylvester p=" + std::to_string(q) + " t2=" + std::to_string(t2) +
                                  " reported non-linear");
    }
  for (unsigned t2 = 1; t2 <= 4; ++t2)
    o.require(is_linear(gh(2, 1, t2)), shape(2, 1, t2) + " reported non-linear");
  o.require(!is_linear(gh(2, 2, 1)), shape(2, 2, 1) + " reported linear");
  o.require(!is_linear(gh(2, 2, 2)), shape(2, 2, 2) + " reported linear");
}

// 8. Every valid a gives the canonical signature.
void variant_family(Outcome& o) {
  const Prime p(3);
  const auto family = enumerate_valid_a(p);
  o.require(family.size() == 9, "expected 9 valid vectors a");
  for (auto [t1, t2] : {std::pair{1u, 1u}, {1u, 2u}, {2u, 1u}}) {
    const auto canonical = report(build_A(p, t1, t2));
    for (const auto& a : family) {
      const auto rep = report(build_A(p, t1, t2, a));
      o.require(signature_compare(canonical, rep) == SignatureVerdict::indistinguishable &&
                    rep.weight_distribution == canonical.weight_distribution,
                shape(3, t1, t2) + " variant a=(" + std::to_string(a[0]) + "," +
                    std::to_string(a[1]) + ") differs");
    }
  }
}

// 9. Kernel dimensions pairwise distinct per t; non-linear rows differ from every Z_9 row.
void distinct_kernels(Outcome& o) {
  const auto& table = table_t2_t6();
  const auto reference = reference_table(3);
  for (unsigned t = 2; t <= 6; ++t) {
    std::set<unsigned> kernels;
    std::size_t rows = 0;
    for (const auto& row : table.rows) {
      if (row.t != t || row.type.alpha1 == 0) continue;
      o.require(row.computed.has_value(), "t=" + std::to_string(t) + " row skipped");
      if (!row.computed) continue;
      ++rows;
      const auto& c = *row.computed;
      o.require(kernels.insert(c.kernel_dim).second,
                "t=" + std::to_string(t) + " repeated kernel dimension " + std::to_string(c.kernel_dim));
      if (c.linear) continue;
      for (const auto& ref : reference)
        if (ref.t == t && ref.alpha1 == 0)
          o.require(c.rank != ref.r || c.kernel_dim != ref.k,
                    row.type.to_string() + " has the (r,k) of Z_9 row " + ref.provenance);
    }
    o.require(rows == types_of_length(t).size() + 1, "t=" + std::to_string(t) + " row count");
  }
}

// 10. Homogeneous distance equals Hamming distance of Gray images.
void isometry(Outcome& o) {
  std::mt19937_64 rng(ComputeOptions{}.seed);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{0, 5}, {4, 0}, {3, 2}, {9, 24}, {1, 1}};
  for (Residue q : {2u, 3u, 5u}) {
    const Prime p(q);
    std::uniform_int_distribution<Residue> zp(0, q - 1), zp2(0, p.square() - 1);
    for (const auto& [a1, a2] : shapes)
      for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Residue> x1(a1), x2(a1), y1(a2), y2(a2);
        for (auto& x : x1) x = zp(rng);
        for (auto& x : x2) x = zp(rng);
        for (auto& y : y1) y = zp2(rng);
        for (auto& y : y2) y = zp2(rng);
        const MixedWord u(p, x1, y1), v(p, x2, y2);
        if (hom_distance(u, v) != hamming_distance(big_phi(u), big_phi(v))) {
          o.require(false, "isometry fails for p=" + std::to_string(q));
          return;
        }
      }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"AC1 Gray-map identities, p in {2,3,5,7}", gray_identities},
      {"AC2 printed generator matrices", printed_matrices},
      {"AC3 normalized H(3,3)", printed_h33},
      {"AC4 GH property and d = N(p-1)/p", gh_family},
      {"AC5 (r,k) golden values, p=3, t<=6", golden_table},
      {"AC6 non-linearity witnesses, p in {3,5}", nonlinearity},
      {"AC7 linearity edge cases", linearity_edges},
      {"AC8 variant signatures, p=3", variant_family},
      {"AC9 distinct kernels per length", distinct_kernels},
      {"AC10 Gray isometry on random pairs", isometry},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs,
                o.pass ? "" : ": ", o.detail.str().c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}

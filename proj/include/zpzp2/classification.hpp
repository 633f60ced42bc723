#pragma once

// Per-length classification: every Z_pZ_{p^2}-linear GH code of length p^t
// built here (plus the Sylvester code), its computed (r, k), and for p = 3 the
// comparison against the tabulated values.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zpzp2/construction.hpp"
#include "zpzp2/errors.hpp"
#include "zpzp2/invariants.hpp"

namespace zpzp2 {

enum class RowStatus { pass, fail, skipped, computed };

inline const char* to_string(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::pass: return "PASS";
    case RowStatus::fail: return "FAIL";
    case RowStatus::skipped: return "SKIPPED";
    case RowStatus::computed: return "COMPUTED";
  }
  return "?";
}

struct TableRow {
  unsigned t = 0;
  CodeType type;
  bool sylvester = false;
  std::optional<InvariantReport> computed;          // empty when skipped
  std::optional<std::pair<unsigned, unsigned>> expected;  // tabulated (r, k)
  RowStatus status = RowStatus::computed;
  std::string note;
};

struct LengthSummary {
  unsigned t = 0;
  bool kernels_distinct = true;           // among computed rows with alpha1 != 0
  bool distinct_from_reference = true;    // non-linear rows vs every alpha1 = 0 row
  std::vector<std::string> notes;
};

struct ClassificationTable {
  Residue p = 0;
  std::vector<TableRow> rows;
  std::vector<LengthSummary> lengths;

  bool ok() const {
    const bool rows_ok = std::none_of(rows.begin(), rows.end(),
                                      [](const TableRow& r) { return r.status == RowStatus::fail; });
    const bool lengths_ok = std::all_of(lengths.begin(), lengths.end(), [](const LengthSummary& s) {
      return s.kernels_distinct && s.distinct_from_reference;
    });
    return rows_ok && lengths_ok;
  }
  bool any_skipped() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const TableRow& r) { return r.status == RowStatus::skipped; });
  }
};

/// (t1, t2) with t = 2 t1 + t2 - 1 and t1, t2 >= 1, t1 ascending.
inline std::vector<std::pair<unsigned, unsigned>> types_of_length(unsigned t) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned t1 = 1; 2 * t1 <= t; ++t1) out.emplace_back(t1, t + 1 - 2 * t1);
  return out;
}

inline ClassificationTable classify(Prime p, unsigned t_min, unsigned t_max,
                                    const ComputeOptions& opts = {}) {
  if (t_min < 1 || t_min > t_max) throw InvalidParameter("invalid t range");
  ClassificationTable table;
  table.p = p.value();
  // Tabulated values exist only for p = 3; other primes are computed-only.
  const bool tabulated = p.value() == 3;
  const auto reference = tabulated ? reference_table(3) : std::vector<ReferenceRow>{};

  for (unsigned t = t_min; t <= t_max; ++t) {
    std::vector<std::pair<unsigned, unsigned>> shapes{{0u, t + 1}};
    for (const auto& s : types_of_length(t)) shapes.push_back(s);
    const std::size_t first = table.rows.size();

    for (const auto& [t1, t2] : shapes) {
      TableRow row;
      row.t = t;
      row.sylvester = t1 == 0;
      row.type = code_type(p, t1, t2);
      for (const auto& ref : reference)
        if (ref.t == t && ref.family != ReferenceFamily::zp2_linear && ref.t1 == t1 && ref.t2 == t2)
          row.expected = std::pair(ref.r, ref.k);
      try {
        const auto gen = row.sylvester ? build_sylvester(p, t2) : build_A(p, t1, t2);
        row.computed = report(gen, opts);
        const auto& c = *row.computed;
        if (!c.gh) {
          row.status = RowStatus::fail;
          row.note = "not a GH code";
        } else if (row.expected) {
          row.status = std::pair(c.rank, c.kernel_dim) == *row.expected ? RowStatus::pass
                                                                         : RowStatus::fail;
        } else {
          row.status = RowStatus::computed;
        }
      } catch (const BudgetExceeded& e) {
        row.status = RowStatus::skipped;
        row.note = e.what();
      }
      table.rows.push_back(std::move(row));
    }

    LengthSummary summary;
    summary.t = t;
    std::set<unsigned> kernels;
    for (std::size_t i = first; i < table.rows.size(); ++i) {
      const auto& row = table.rows[i];
      if (!row.computed) continue;
      if (!kernels.insert(row.computed->kernel_dim).second) {
        summary.kernels_distinct = false;
        summary.notes.push_back("kernel dimension " + std::to_string(row.computed->kernel_dim) +
                                " repeats at t=" + std::to_string(t));
      }
      if (!tabulated || row.sylvester) continue;
      for (const auto& ref : reference) {
        if (ref.t != t || ref.family != ReferenceFamily::zp2_linear) continue;
        if (signature_compare(*row.computed, reference_report(ref, p.value())) ==
            SignatureVerdict::indistinguishable) {
          summary.distinct_from_reference = false;
          summary.notes.push_back(row.type.to_string() + " matches Z9 row " + ref.provenance);
        }
      }
    }
    table.lengths.push_back(std::move(summary));
  }
  return table;
}

}  // namespace zpzp2

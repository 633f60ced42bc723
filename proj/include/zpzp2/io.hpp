#pragma once

// Text, JSON and CSV serialisation. Every JSON document carries a top-level
// "schema" field of the form "zpzp2.<kind>/<version>".

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zpzp2/classification.hpp"
#include "zpzp2/code.hpp"
#include "zpzp2/construction.hpp"
#include "zpzp2/invariants.hpp"

namespace zpzp2::io {

using nlohmann::json;

inline constexpr const char* kGeneratorSchema = "zpzp2.generator/1";
inline constexpr const char* kCodeSchema = "zpzp2.code/1";
inline constexpr const char* kVerdictSchema = "zpzp2.verdict/1";
inline constexpr const char* kReportSchema = "zpzp2.report/1";
inline constexpr const char* kTableSchema = "zpzp2.table/1";

inline json to_json(const CodeType& t) {
  return {{"alpha1", t.alpha1}, {"alpha2", t.alpha2}, {"t1", t.t1}, {"t2", t.t2}, {"t", t.t}};
}

/// Matrix in block layout: Z_p entries, " | ", Z_{p^2} entries; one row per line.
inline std::string to_text(const GeneratorMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m.rows()) {
    bool first = true;
    auto put = [&](Residue x) {
      if (!first) os << ' ';
      os << x;
      first = false;
    };
    for (Residue x : row.zp()) put(x);
    if (m.alpha1() > 0 && m.alpha2() > 0) {
      os << " |";
      first = false;
    }
    for (Residue x : row.zp2()) put(x);
    os << '\n';
  }
  return os.str();
}

inline json to_json(const GeneratorMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows().size(); ++i) {
    const auto& r = m.rows()[i];
    rows.push_back({{"zp", r.zp()}, {"zp2", r.zp2()}, {"order", m.row_orders()[i]}});
  }
  return {{"schema", kGeneratorSchema},
          {"p", m.prime().value()},
          {"type", to_json(m.type())},
          {"rows", std::move(rows)}};
}

inline GeneratorMatrix generator_from_json(const json& j) {
  if (j.value("schema", "") != kGeneratorSchema)
    throw InvalidParameter("unexpected schema for a generator matrix");
  const Prime p(j.at("p").get<Residue>());
  const auto& type = j.at("type");
  std::vector<MixedWord> rows;
  for (const auto& r : j.at("rows"))
    rows.emplace_back(p, r.at("zp").get<std::vector<Residue>>(),
                      r.at("zp2").get<std::vector<Residue>>());
  return GeneratorMatrix(p, type.at("alpha1").get<std::size_t>(),
                         type.at("alpha2").get<std::size_t>(), std::move(rows));
}

/// One codeword per line, space-separated symbols.
inline std::string to_text(const GrayCode& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto w = g.word(i);
    for (std::size_t j = 0; j < w.size(); ++j) os << (j ? " " : "") << unsigned{w[j]};
    os << '\n';
  }
  return os.str();
}

inline json to_json(const GrayCode& g, const std::optional<CodeType>& type = std::nullopt) {
  json words = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto w = g.word(i);
    words.push_back(std::vector<unsigned>(w.begin(), w.end()));
  }
  json j = {{"schema", kCodeSchema},
            {"p", g.prime().value()},
            {"length", g.length()},
            {"size", g.size()},
            {"codewords", std::move(words)}};
  if (type) j["type"] = to_json(*type);
  return j;
}

inline std::string rows_to_csv(const std::vector<GrayVector>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << unsigned{r[j]};
    os << '\n';
  }
  return os.str();
}

inline json to_json(const GHVerdict& v, std::size_t length, std::size_t size,
                    std::optional<std::size_t> min_distance) {
  json j = {{"schema", kVerdictSchema},
            {"gh", v.is_gh},
            {"lambda", v.lambda},
            {"length", length},
            {"size", size},
            {"mode", to_string(v.mode)}};
  if (min_distance) j["min_distance"] = *min_distance;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.witness) {
    const auto& [u, w] = *v.witness;
    j["witness"] = {std::vector<unsigned>(u.begin(), u.end()),
                    std::vector<unsigned>(w.begin(), w.end())};
  }
  return j;
}

inline json to_json(const InvariantReport& r) {
  return {{"schema", kReportSchema},
          {"p", r.p},
          {"type", to_json(r.type)},
          {"length", r.length},
          {"size", r.size},
          {"min_distance", r.min_distance},
          {"rank", r.rank},
          {"kernel_dim", r.kernel_dim},
          {"linear", r.linear},
          {"gh", r.gh},
          {"gh_mode", to_string(r.gh_mode)},
          {"weight_distribution", r.weight_distribution}};
}

inline std::string report_csv_header() {
  return "p,alpha1,alpha2,t1,t2,t,length,size,min_distance,r,k,linear,gh\n";
}

inline std::string to_csv_row(const InvariantReport& r) {
  std::ostringstream os;
  os << r.p << ',' << r.type.alpha1 << ',' << r.type.alpha2 << ',' << r.type.t1 << ','
     << r.type.t2 << ',' << r.type.t << ',' << r.length << ',' << r.size << ',' << r.min_distance
     << ',' << r.rank << ',' << r.kernel_dim << ',' << (r.linear ? "true" : "false") << ','
     << (r.gh ? "true" : "false") << '\n';
  return os.str();
}

inline std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "p=" << r.p << " type=" << r.type.to_string() << " N=" << r.length << " size=" << r.size
     << " d=" << r.min_distance << " r=" << r.rank << " k=" << r.kernel_dim
     << " linear=" << (r.linear ? "true" : "false") << " gh=" << (r.gh ? "true" : "false")
     << '\n';
  return os.str();
}

inline std::string table_csv(const ClassificationTable& t) {
  std::ostringstream os;
  os << "t,alpha1,alpha2,t1,t2,r,k,linear,gh,status\n";
  for (const auto& row : t.rows) {
    os << row.t << ',' << row.type.alpha1 << ',' << row.type.alpha2 << ',' << row.type.t1 << ','
       << row.type.t2 << ',';
    if (row.computed)
      os << row.computed->rank << ',' << row.computed->kernel_dim << ','
         << (row.computed->linear ? "true" : "false") << ',' << (row.computed->gh ? "true" : "false");
    else
      os << ",,,";
    os << ',' << to_string(row.status) << '\n';
  }
  return os.str();
}

inline std::string table_text(const ClassificationTable& t) {
  std::ostringstream os;
  for (const auto& row : t.rows) {
    os << "t=" << row.t << ' ' << row.type.to_string();
    if (row.computed)
      os << " computed (" << row.computed->rank << ',' << row.computed->kernel_dim << ')';
    else
      os << " computed -";
    if (row.expected) os << " expected (" << row.expected->first << ',' << row.expected->second << ')';
    os << ' ' << to_string(row.status);
    if (!row.note.empty()) os << "  # " << row.note;
    os << '\n';
  }
  for (const auto& s : t.lengths) {
    os << "t=" << s.t << " kernels " << (s.kernels_distinct ? "pairwise distinct" : "NOT distinct");
    if (t.p == 3)
      os << ", Z9 rows " << (s.distinct_from_reference ? "all distinct" : "NOT all distinct");
    os << '\n';
    for (const auto& n : s.notes) os << "  # " << n << '\n';
  }
  return os.str();
}

inline json to_json(const ClassificationTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json j = {{"t", row.t},
              {"type", to_json(row.type)},
              {"sylvester", row.sylvester},
              {"status", to_string(row.status)}};
    if (row.computed) {
      j["r"] = row.computed->rank;
      j["k"] = row.computed->kernel_dim;
      j["linear"] = row.computed->linear;
      j["gh"] = row.computed->gh;
    }
    if (row.expected) j["expected"] = {row.expected->first, row.expected->second};
    if (!row.note.empty()) j["note"] = row.note;
    rows.push_back(std::move(j));
  }
  json lengths = json::array();
  for (const auto& s : t.lengths)
    lengths.push_back({{"t", s.t},
                       {"kernels_distinct", s.kernels_distinct},
                       {"distinct_from_reference", s.distinct_from_reference},
                       {"notes", s.notes}});
  return {{"schema", kTableSchema}, {"p", t.p}, {"rows", std::move(rows)},
          {"lengths", std::move(lengths)}, {"ok", t.ok()}};
}

}  // namespace zpzp2::io

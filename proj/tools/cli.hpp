#pragma once

// zpzp2 command line: construct, verify, invariants, table, variants.
// Exit codes: 0 ok, 1 verification or golden failure, 2 invalid input,
// 3 budget exceeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zpzp2/zpzp2.hpp"

namespace zpzp2::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kInvalidInput = 2, kBudgetExceeded = 3 };

enum class Format { text, json, csv };

struct RunConfig {
  Residue p = 3;
  unsigned t1 = 1;
  unsigned t2 = 1;
  std::vector<Residue> a;
  Format format = Format::text;
  unsigned workers = 0;
  std::uint64_t budget_codewords = ComputeOptions{}.max_codewords;
  std::uint64_t budget_ops = ComputeOptions{}.max_symbol_ops;
  std::uint64_t seed = ComputeOptions{}.seed;
  std::string out;
  unsigned t_min = 2;
  unsigned t_max = 6;
  bool include_permutations = false;

  ComputeOptions options() const {
    ComputeOptions o;
    o.max_codewords = budget_codewords;
    o.max_symbol_ops = budget_ops;
    o.workers = workers;
    o.seed = seed;
    return o;
  }

  std::optional<std::vector<Residue>> variant() const {
    if (a.empty()) return std::nullopt;
    return a;
  }
};

namespace detail {

/// t1 = 0 selects the Sylvester code of type (p^{t2-1}, 0; 0, t2).
inline GeneratorMatrix build(const RunConfig& cfg) {
  const Prime p(cfg.p);
  if (cfg.t1 == 0) {
    if (!cfg.a.empty()) throw InvalidParameter("--a does not apply to the Sylvester code (t1 = 0)");
    return build_sylvester(p, cfg.t2);
  }
  return build_A(p, cfg.t1, cfg.t2, cfg.variant());
}

inline int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const auto m = build(cfg);
  if (cfg.format == Format::json)
    out << io::to_json(m).dump(2) << '\n';
  else
    out << io::to_text(m);
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto opts = cfg.options();
  const auto gen = build(cfg);
  const GrayCode g = gray_image(enumerate(gen, opts));
  const auto verdict = is_gh_code(g, opts);
  std::optional<std::size_t> d;
  if (g.size() >= 2) d = min_distance(g, opts);
  const bool ok = verdict.is_gh && d && *d * cfg.p == g.length() * (cfg.p - 1);

  switch (cfg.format) {
    case Format::json: out << io::to_json(verdict, g.length(), g.size(), d).dump(2) << '\n'; break;
    case Format::csv:
      out << "gh,lambda,N,size,d,mode\n"
          << (verdict.is_gh ? "true" : "false") << ',' << verdict.lambda << ',' << g.length() << ','
          << g.size() << ',' << (d ? std::to_string(*d) : "") << ',' << to_string(verdict.mode)
          << '\n';
      break;
    case Format::text:
      out << "gh=" << (verdict.is_gh ? "true" : "false") << " lambda=" << verdict.lambda
          << " N=" << g.length() << " size=" << g.size() << " d=" << (d ? std::to_string(*d) : "-")
          << " mode=" << to_string(verdict.mode) << '\n';
      if (!verdict.reason.empty()) out << "reason: " << verdict.reason << '\n';
      break;
  }
  return ok ? kOk : kFailed;
}

inline int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
  const auto rep = report(build(cfg), cfg.options());
  switch (cfg.format) {
    case Format::json: out << io::to_json(rep).dump(2) << '\n'; break;
    case Format::csv: out << io::report_csv_header() << io::to_csv_row(rep); break;
    case Format::text: out << io::to_text(rep); break;
  }
  return kOk;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out) {
  const auto table = classify(Prime(cfg.p), cfg.t_min, cfg.t_max, cfg.options());
  switch (cfg.format) {
    case Format::json: out << io::to_json(table).dump(2) << '\n'; break;
    case Format::csv: out << io::table_csv(table); break;
    case Format::text: out << io::table_text(table); break;
  }
  if (!table.ok()) return kFailed;
  return table.any_skipped() ? kBudgetExceeded : kOk;
}

inline int cmd_variants(const RunConfig& cfg, std::ostream& out) {
  const Prime p(cfg.p);
  if (cfg.t1 < 1) throw InvalidParameter("variants need t1 >= 1");
  const auto opts = cfg.options();
  const auto canonical = report(build_A(p, cfg.t1, cfg.t2), opts);

  std::vector<std::vector<Residue>> family =
      cfg.a.empty() ? enumerate_valid_a(p) : std::vector<std::vector<Residue>>{cfg.a};
  if (cfg.include_permutations) {
    std::vector<std::vector<Residue>> all;
    for (auto a : family) {
      std::sort(a.begin(), a.end());
      do all.push_back(a);
      while (std::next_permutation(a.begin(), a.end()));
    }
    family = std::move(all);
  }

  bool all_equal = true;
  io::json rows = io::json::array();
  std::ostringstream text, csv;
  csv << "a,size,d,r,k,signature\n";
  for (const auto& a : family) {
    const auto rep = report(build_A(p, cfg.t1, cfg.t2, a), opts);
    const auto verdict = signature_compare(canonical, rep);
    all_equal = all_equal && verdict == SignatureVerdict::indistinguishable;
    std::string label;
    for (std::size_t i = 0; i < a.size(); ++i) label += (i ? "," : "") + std::to_string(a[i]);
    text << "a=(" << label << ") size=" << rep.size << " d=" << rep.min_distance
         << " r=" << rep.rank << " k=" << rep.kernel_dim << ' ' << to_string(verdict) << '\n';
    csv << '"' << label << "\"," << rep.size << ',' << rep.min_distance << ',' << rep.rank << ','
        << rep.kernel_dim << ',' << to_string(verdict) << '\n';
    rows.push_back({{"a", a}, {"report", io::to_json(rep)}, {"signature", to_string(verdict)}});
  }

  switch (cfg.format) {
    case Format::json:
      out << io::json{{"schema", "zpzp2.variants/1"},
                      {"p", cfg.p},
                      {"t1", cfg.t1},
                      {"t2", cfg.t2},
                      {"canonical", io::to_json(canonical)},
                      {"variants", std::move(rows)},
                      {"all_indistinguishable", all_equal}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv: out << csv.str(); break;
    case Format::text:
      out << "canonical " << io::to_text(canonical) << text.str() << family.size() << " variants, "
          << (all_equal ? "all signatures equal" : "signatures differ") << '\n';
      break;
  }
  return all_equal ? kOk : kFailed;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z_pZ_{p^2}-linear generalized Hadamard codes", "zpzp2"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub, bool with_type) {
    sub->add_option("--p", cfg.p, "prime")->envname("ZPZP2_P");
    if (with_type) {
      sub->add_option("--t1", cfg.t1, "rows of order p^2 (0: Sylvester code)")->envname("ZPZP2_T1");
      sub->add_option("--t2", cfg.t2, "rows of order p")->envname("ZPZP2_T2");
      sub->add_option("--a", cfg.a, "variant vector a_1,...,a_{p-1}")->delimiter(',');
    }
    sub->add_option("--format", cfg.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->envname("ZPZP2_FORMAT");
    sub->add_option("--workers", cfg.workers, "worker threads (0: all cores)")
        ->envname("ZPZP2_WORKERS");
    sub->add_option("--budget-codewords", cfg.budget_codewords, "max codewords")
        ->check(CLI::PositiveNumber)
        ->envname("ZPZP2_BUDGET_CODEWORDS");
    sub->add_option("--budget-ops", cfg.budget_ops, "max symbol operations for full GH checks")
        ->check(CLI::PositiveNumber)
        ->envname("ZPZP2_BUDGET_OPS");
    sub->add_option("--seed", cfg.seed, "seed for sampled checks")->envname("ZPZP2_SEED");
    sub->add_option("--out", cfg.out, "write output to this file")->envname("ZPZP2_OUT");
  };

  auto* construct = app.add_subcommand("construct", "print a generator matrix");
  auto* verify = app.add_subcommand("verify", "check the GH property and minimum distance");
  auto* invariants = app.add_subcommand("invariants", "size, distance, rank, kernel, linearity");
  auto* table = app.add_subcommand("table", "classification table per length p^t");
  auto* variants = app.add_subcommand("variants", "invariants of every starting matrix A_{p,a}");
  for (auto* sub : {construct, verify, invariants, variants}) common(sub, true);
  common(table, false);
  table->add_option("--t-min", cfg.t_min, "smallest t")->check(CLI::PositiveNumber);
  table->add_option("--t-max", cfg.t_max, "largest t")->check(CLI::PositiveNumber);
  variants->add_flag("--include-permutations", cfg.include_permutations,
                     "also try every coordinate permutation of each a");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot open " << cfg.out << '\n';
      return kInvalidInput;
    }
  }
  std::ostream& sink = cfg.out.empty() ? out : file;

  try {
    if (construct->parsed()) return detail::cmd_construct(cfg, sink);
    if (verify->parsed()) return detail::cmd_verify(cfg, sink);
    if (invariants->parsed()) return detail::cmd_invariants(cfg, sink);
    if (table->parsed()) return detail::cmd_table(cfg, sink);
    return detail::cmd_variants(cfg, sink);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what()
        << "\n  raise --budget-codewords / --budget-ops (or ZPZP2_BUDGET_*) to at least "
        << e.required() << '\n';
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NotGhCode& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace zpzp2::cli

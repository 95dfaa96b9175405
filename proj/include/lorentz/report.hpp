#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lorentz/checks.hpp"
#include "lorentz/exponents.hpp"
#include "lorentz/quadrature.hpp"

namespace lorentz {

// ---------------------------------------------------------------------------
// CheckReport rendering.  CSV and JSON lines are byte-stable for identical
// report vectors: 12 significant digits, "." decimal separator always.

namespace detail {

/// Numbers render as %.12g; non-finite values spell out as inf/-inf/nan so
/// the columns stay parseable.
inline std::string report_num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  return fmt_num(v);
}

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string csv_header() { return "check_id,params,lhs,rhs,margin,verdict,samples,note"; }

inline std::string to_csv_row(const CheckReport& rep) {
  std::string out;
  out += detail::csv_escape(rep.check_id);
  out += ',';
  out += detail::csv_escape(rep.params_string());
  out += ',';
  out += detail::report_num(rep.lhs);
  out += ',';
  out += detail::report_num(rep.rhs);
  out += ',';
  out += detail::report_num(rep.margin);
  out += ',';
  out += to_string(rep.verdict);
  out += ',';
  out += std::to_string(rep.samples);
  out += ',';
  out += detail::csv_escape(rep.note);
  return out;
}

inline nlohmann::json to_json(const CheckReport& rep) {
  const auto num = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    return detail::report_num(v);  // JSON has no inf literal
  };
  return nlohmann::json{{"check_id", rep.check_id}, {"params", rep.params},
                        {"lhs", num(rep.lhs)},      {"rhs", num(rep.rhs)},
                        {"margin", num(rep.margin)}, {"verdict", to_string(rep.verdict)},
                        {"samples", rep.samples},   {"note", rep.note}};
}

struct RunSummary {
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t skipped = 0;

  [[nodiscard]] std::int64_t total() const { return passed + failed + skipped; }
};

inline RunSummary summarize(const std::vector<CheckReport>& reports) {
  RunSummary s;
  for (const auto& rep : reports) {
    switch (rep.verdict) {
      case Verdict::Pass: ++s.passed; break;
      case Verdict::Fail: ++s.failed; break;
      case Verdict::Skip: ++s.skipped; break;
    }
  }
  return s;
}

/// One JSON object per line.  `meta`, when non-null, leads as its own line so
/// a stream consumer can split detail rows from run context.
inline void write_jsonl(std::ostream& os, const std::vector<CheckReport>& reports,
                        const nlohmann::json* meta = nullptr) {
  if (meta != nullptr) os << meta->dump() << '\n';
  for (const auto& rep : reports) os << to_json(rep).dump() << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<CheckReport>& reports) {
  os << csv_header() << '\n';
  for (const auto& rep : reports) os << to_csv_row(rep) << '\n';
}

/// Human-oriented table: verdict, id, params, then the three numeric columns.
inline void write_pretty(std::ostream& os, const std::vector<CheckReport>& reports) {
  std::size_t id_w = 8, params_w = 6;
  for (const auto& rep : reports) {
    id_w = std::max(id_w, rep.check_id.size());
    params_w = std::max(params_w, rep.params_string().size());
  }
  for (const auto& rep : reports) {
    std::string line = to_string(rep.verdict);
    line.resize(5, ' ');
    line += ' ';
    std::string id = rep.check_id;
    id.resize(id_w, ' ');
    std::string params = rep.params_string();
    params.resize(params_w, ' ');
    line += id + "  " + params + "  lhs=" + detail::report_num(rep.lhs) +
            "  rhs=" + detail::report_num(rep.rhs) + "  margin=" + detail::report_num(rep.margin);
    if (!rep.note.empty()) line += "  (" + rep.note + ")";
    os << line << '\n';
  }
  const RunSummary s = summarize(reports);
  os << "passed=" << s.passed << " failed=" << s.failed << " skipped=" << s.skipped << '\n';
}

// ---------------------------------------------------------------------------
// Run configuration: everything a CLI invocation resolved to, serializable so
// a run can be reproduced from its own output.

struct RunConfig {
  std::string command;
  std::string item;                    // gallery id string, empty when unused
  std::string suite;                   // verify only
  std::vector<double> p_values;
  std::vector<std::string> q_values;   // "inf" or a decimal spelling
  QuadratureSpec quad{};
  std::uint64_t seed = 1;
  std::string output;                  // file path, empty = stdout
  std::string format = "pretty";       // json | csv | pretty
  bool timestamp = true;

  [[nodiscard]] std::vector<Exponent> parsed_q() const {
    std::vector<Exponent> out;
    out.reserve(q_values.size());
    for (const auto& s : q_values) out.push_back(Exponent::parse(s));
    return out;
  }
};

inline nlohmann::json to_json(const RunConfig& cfg) {
  return nlohmann::json{{"command", cfg.command},
                        {"item", cfg.item},
                        {"suite", cfg.suite},
                        {"p_values", cfg.p_values},
                        {"q_values", cfg.q_values},
                        {"quad",
                         {{"rel_tol", cfg.quad.rel_tol},
                          {"abs_tol", cfg.quad.abs_tol},
                          {"max_subdivisions", cfg.quad.max_subdivisions},
                          {"tail_cutoff_decades", cfg.quad.tail_cutoff_decades}}},
                        {"seed", cfg.seed},
                        {"output", cfg.output},
                        {"format", cfg.format},
                        {"timestamp", cfg.timestamp}};
}

inline RunConfig run_config_from_json(const nlohmann::json& j) {
  RunConfig cfg;
  cfg.command = j.at("command").get<std::string>();
  cfg.item = j.value("item", std::string());
  cfg.suite = j.value("suite", std::string());
  cfg.p_values = j.value("p_values", std::vector<double>());
  cfg.q_values = j.value("q_values", std::vector<std::string>());
  if (j.contains("quad")) {
    const auto& q = j.at("quad");
    cfg.quad.rel_tol = q.value("rel_tol", cfg.quad.rel_tol);
    cfg.quad.abs_tol = q.value("abs_tol", cfg.quad.abs_tol);
    cfg.quad.max_subdivisions = q.value("max_subdivisions", cfg.quad.max_subdivisions);
    cfg.quad.tail_cutoff_decades = q.value("tail_cutoff_decades", cfg.quad.tail_cutoff_decades);
  }
  cfg.seed = j.value("seed", std::uint64_t{1});
  cfg.output = j.value("output", std::string());
  cfg.format = j.value("format", std::string("pretty"));
  cfg.timestamp = j.value("timestamp", true);
  return cfg;
}

}  // namespace lorentz

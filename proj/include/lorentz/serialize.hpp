#pragma once

#include <json.hpp>

#include "lorentz/norms.hpp"
#include "lorentz/profiles.hpp"

namespace lorentz {

inline nlohmann::json to_json(const StepProfile& s) {
  return nlohmann::json{{"breakpoints", s.breakpoints()}, {"values", s.values()}};
}

inline StepProfile step_profile_from_json(const nlohmann::json& j) {
  return StepProfile::make(j.at("breakpoints").get<std::vector<double>>(),
                           j.at("values").get<std::vector<double>>());
}

inline nlohmann::json to_json(const NormValue& v) {
  if (v.is_finite()) return nlohmann::json{{"finite", v.value()}};
  return nlohmann::json{{"infinite", to_string(v.reason())}};
}

inline DivergenceReason divergence_reason_from_string(const std::string& s) {
  if (s == "HEAD_DIVERGENCE") return DivergenceReason::HeadDivergence;
  if (s == "TAIL_DIVERGENCE") return DivergenceReason::TailDivergence;
  if (s == "LOG_EXPONENT_TEST") return DivergenceReason::LogExponentTest;
  throw std::invalid_argument("unknown divergence reason: " + s);
}

inline NormValue norm_value_from_json(const nlohmann::json& j) {
  if (j.contains("finite")) return NormValue::finite(j.at("finite").get<double>());
  return NormValue::infinite(divergence_reason_from_string(j.at("infinite").get<std::string>()));
}

inline Profile profile_from_json(const nlohmann::json& j);

inline nlohmann::json to_json(const Profile& f) {
  return std::visit(
      [](const auto& g) -> nlohmann::json {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, StepProfile>) {
          return {{"family", "step"}, {"breakpoints", g.breakpoints()}, {"values", g.values()}};
        } else if constexpr (std::is_same_v<T, PowerProfile>) {
          return {{"family", "power"}, {"coeff", g.coeff}, {"exponent", g.exponent}, {"support_end", g.support_end}};
        } else if constexpr (std::is_same_v<T, LogPowerProfile>) {
          return {{"family", "logpower"}, {"p", g.p}, {"alpha", g.alpha},
                  {"log_offset", g.log_offset}, {"support_end", g.support_end}};
        } else {
          return {{"family", "indicator"}, {"height", g.height}, {"support_end", g.support_end}};
        }
      },
      f);
}

inline Profile profile_from_json(const nlohmann::json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "step") return step_profile_from_json(j);
  if (family == "power")
    return PowerProfile(j.at("coeff").get<double>(), j.at("exponent").get<double>(),
                        j.at("support_end").get<double>());
  if (family == "logpower")
    return LogPowerProfile(j.at("p").get<double>(), j.at("alpha").get<double>(),
                           j.at("log_offset").get<double>(), j.at("support_end").get<double>());
  if (family == "indicator")
    return IndicatorProfile(j.at("height").get<double>(), j.at("support_end").get<double>());
  throw std::invalid_argument("unknown profile family: " + family);
}

}  // namespace lorentz

#include "matroot/schroeder/report.hpp"

namespace matroot::schroeder {

std::string to_string(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::max_iter: return "max_iter";
    case Termination::diverged: return "diverged";
    case Termination::singular_iterate: return "singular_iterate";
  }
  return "?";
}

nlohmann::json to_json(const StepRecord& step) {
  nlohmann::json j{{"k", step.k}, {"residual_norm", step.residual_norm}, {"delta_norm", step.delta_norm}};
  j["bound_plain"] = step.bound_plain ? nlohmann::json(*step.bound_plain) : nlohmann::json(nullptr);
  j["bound_sharp"] = step.bound_sharp ? nlohmann::json(*step.bound_sharp) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const IterationReport& report) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : report.steps) steps.push_back(to_json(s));
  nlohmann::json pre{{"performed", report.precheck.performed},
                     {"normB_one", report.precheck.normB_one},
                     {"normB_inf", report.precheck.normB_inf},
                     {"gershgorin_ok", report.precheck.gershgorin_ok},
                     {"rho_estimate", report.precheck.rho_estimate},
                     {"rho_method", report.precheck.rho_method}};
  pre["warning"] = report.precheck.warning ? nlohmann::json(*report.precheck.warning) : nlohmann::json(nullptr);
  return {{"p", report.p},
          {"m", report.m},
          {"norm", report.norm},
          {"normB", report.normB},
          {"bounds_available", report.bounds_available},
          {"steps", std::move(steps)},
          {"termination", to_string(report.termination)},
          {"message", report.message},
          {"precheck", std::move(pre)}};
}

}  // namespace matroot::schroeder

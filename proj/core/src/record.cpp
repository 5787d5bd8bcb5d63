#include "critga/record.hpp"

#include <fmt/format.h>

#include "critga/error.hpp"

namespace critga {

namespace {
constexpr ControlAction kAllActions[] = {
    ControlAction::IncreaseMutation, ControlAction::DecreaseMutation, ControlAction::ReinitMutation,
    ControlAction::ReintroduceElite, ControlAction::GrowPopulation,   ControlAction::ResetPopulationToTwo,
};
}  // namespace

std::string_view to_string(ControlAction action) noexcept {
  switch (action) {
    case ControlAction::IncreaseMutation: return "IncreaseMutation";
    case ControlAction::DecreaseMutation: return "DecreaseMutation";
    case ControlAction::ReinitMutation: return "ReinitMutation";
    case ControlAction::ReintroduceElite: return "ReintroduceElite";
    case ControlAction::GrowPopulation: return "GrowPopulation";
    case ControlAction::ResetPopulationToTwo: return "ResetPopulationToTwo";
  }
  return "?";
}

ControlAction parse_control_action(std::string_view text) {
  for (auto action : kAllActions) {
    if (to_string(action) == text) return action;
  }
  throw ConfigError(fmt::format("unknown control action '{}'", text), "action");
}

std::string format_actions(const std::vector<ControlAction>& actions, bool initial) {
  if (initial) return "init";
  if (actions.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) out += '+';
    out += to_string(actions[i]);
  }
  return out;
}

std::vector<ControlAction> parse_actions(std::string_view text) {
  std::vector<ControlAction> actions;
  if (text == "init" || text == "none" || text.empty()) return actions;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('+', start), text.size());
    actions.push_back(parse_control_action(text.substr(start, end - start)));
    start = end + 1;
  }
  return actions;
}

}  // namespace critga

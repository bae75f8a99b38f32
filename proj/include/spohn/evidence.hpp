#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spohn/rank.hpp"

namespace spohn {

/**
 * One piece of evidence about a single variable: either "the variable takes
 * one of `values`", learned with `strength` (infinity for certainty), or a
 * complete target marginal over the variable's domain.
 */
struct EvidenceSpec {
  std::string variable;
  std::vector<std::string> values;
  Rank strength;
  std::optional<std::vector<Rank>> target;

  static EvidenceSpec observe(std::string variable,
                              std::vector<std::string> values, Rank strength) {
    return {std::move(variable), std::move(values), strength, std::nullopt};
  }
  static EvidenceSpec certain(std::string variable,
                              std::vector<std::string> values) {
    return observe(std::move(variable), std::move(values), Rank::infinity());
  }
  static EvidenceSpec toward(std::string variable, std::vector<Rank> target) {
    return {std::move(variable), {}, Rank(0), std::move(target)};
  }

  bool is_target() const { return target.has_value(); }
  bool is_certain() const { return !is_target() && strength.is_infinite(); }

  friend bool operator==(const EvidenceSpec&, const EvidenceSpec&) = default;
};

}  // namespace spohn

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "ustep/errors.hpp"

namespace ustep {

struct MinerConfig {
  // A leaf's best template is reused only if its similarity is strictly
  // greater than sigma.
  double sigma = 0.5;
  // A leaf holding more than phi templates is split.
  std::size_t phi = 8;
  std::vector<std::string> mask_rules;
  // When true a template wildcard only matches a message wildcard; when
  // false it matches any message token.
  bool strict_wildcard_sim = false;

  void validate() const {
    if (!std::isfinite(sigma) || sigma < 0.0 || sigma > 1.0) {
      throw ConfigError("sigma must lie in [0, 1], got " + std::to_string(sigma));
    }
    if (phi < 1) throw ConfigError("phi must be at least 1");
  }
};

}  // namespace ustep

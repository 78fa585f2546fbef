#pragma once

#include <string>

#include "bellkit/ks.hpp"
#include "bellkit/lhv.hpp"

namespace bellkit {

// Hidden-variable model document:
//   {"points": ["w0", ...],
//    "weights": [0.5, ...],
//    "table": {"a1": {"w0": 1, ...}, ...}}
HiddenVariableModel parse_lhv_model(const std::string& text);
HiddenVariableModel load_lhv_model(const std::string& path);

// Contextuality instance document:
//   {"observables": [{"label": "...", "matrix": [[re, im], ...]}, ...],
//    "contexts": [{"members": [0, 1, 2], "sign": 1}, ...]}
// Matrices are row-major; entry count must be a perfect square.
KSInstance parse_ks_instance(const std::string& text);
KSInstance load_ks_instance(const std::string& path);
std::string ks_instance_to_json(const KSInstance& instance);

}  // namespace bellkit

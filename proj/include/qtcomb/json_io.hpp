#pragma once

#include <json.hpp>

#include "qtcomb/identity_suite.hpp"
#include "qtcomb/lattice_paths.hpp"
#include "qtcomb/polynomial.hpp"

namespace qtcomb {

using Json = nlohmann::ordered_json;

// Array of {"q","t","z","c"} objects in canonical term order.
Json polynomial_json(const Polynomial& p);

// {"area_word","labels","dv"} plus derived statistics.
Json path_json(const DecoratedLabelledPath& p);

// {name, params, passed, lhs, rhs, witness[, elapsed_ms]}; timings are
// opt-in so that reports are byte-stable across runs and thread counts.
Json report_json(const CheckReport& report, bool with_elapsed = false);

}  // namespace qtcomb

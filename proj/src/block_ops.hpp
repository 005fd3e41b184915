#pragma once

#include <optional>

#include "akschur/modules.hpp"
#include "akschur/shifted_action.hpp"

namespace akschur {

// Block operator of a generator on W; nullopt when an image leaves its target module.
std::optional<PrimeMatrix> operator_matrix(const WeightSpace& W, const ShiftedAction<Fp>& act, Gen g, int i,
                                           bool twisted);

}  // namespace akschur

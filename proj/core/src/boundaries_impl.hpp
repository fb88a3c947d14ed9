#pragma once

#include "minilb/field.hpp"
#include "minilb/mask.hpp"

namespace minilb::detail {

// applyInletOutlet without re-validating the mask; the engine validates once per run.
void applyInletOutletUnchecked(PopulationField& post, const CellMask& mask);

} // namespace minilb::detail

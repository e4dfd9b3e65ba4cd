#pragma once

#include <optional>
#include <string>

#include "pbred/pipeline.hpp"

namespace pbred {

// Renders the stage table of a pipeline run. The human form is an aligned
// text table (qubits, deductions, term counts by degree); the machine form
// is stable key=value lines. When the product matches a bundled benchmark
// entry, the human form appends the published counts and the deltas.
std::string render_stage_table(const PipelineResult& result,
                               const std::optional<Integer>& product = {});
std::string render_machine_report(const PipelineResult& result,
                                  const std::optional<Integer>& product = {});

}  // namespace pbred

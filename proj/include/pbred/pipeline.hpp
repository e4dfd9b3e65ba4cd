#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbred/deduction.hpp"
#include "pbred/encoder.hpp"
#include "pbred/equation.hpp"
#include "pbred/judgments.hpp"
#include "pbred/reduce.hpp"
#include "pbred/substitution.hpp"

namespace pbred {

struct PipelineConfig {
    // Search budget per round; no search when absent.
    std::optional<std::uint64_t> states;
    std::size_t pattern_degree_cap = 2;
    std::size_t rounds = 1;
    // Whole-polynomial rewrites with one lambda per deduction instead of the
    // default per-term splitting.
    bool global_lambda = false;
    std::vector<Deduction> user_deductions;
    // Variable order for the search; empty means ascending index over the
    // live variables.
    std::vector<var_index> search_order;
    // Redundant equations, implied by the system, used only to sharpen the
    // search's interval pruning. They never enter the Hamiltonian.
    std::vector<BinaryEquation> pruning_equations;
};

struct PipelineStage {
    std::string label;
    DegreeProfile profile;
    // Deduction records applied since the previous stage; absent for stages
    // that apply none by construction.
    std::optional<std::size_t> deductions_applied;
};

struct PipelineResult {
    PipelineConfig config;
    Polynomial h0;
    Polynomial h_final;
    std::vector<PipelineStage> stages;
    // Full elimination chain: judgment fixes/equalities, then search
    // constants/equalities, in application order.
    Substitution substitution;
    std::vector<ReductionStep> steps;
    JudgmentOutcome judgments;
    std::vector<BinaryEquation> final_equations;
};

// The whole treatment: square-sum the equations into H0, run the simple
// judgments (fixes and equalities only) for H1, then alternate bounded
// search, pattern extraction and guarded rewrites for the configured number
// of rounds. Ground states are preserved by construction throughout. Throws
// InfeasibleError / NoPlausibleStatesError when the system is shown to have
// no solution.
PipelineResult reduce_pipeline(const std::vector<BinaryEquation>& equations,
                               const PipelineConfig& config);

// reduce_pipeline on a factorization instance: adds the product-range
// equation to the pruning set and defaults the search order to factor bits
// most-significant-first, the order that makes interval pruning bite.
PipelineResult reduce_factorization(const FactorizationInstance& inst,
                                    PipelineConfig config = {});

}  // namespace pbred

#pragma once

// Four-condition harness: assemble the A/B/C/D extraction runs for a model,
// compute the 4x4 similarity matrix, the four contrasts and the distortion
// factor.
//
//   A: comprehension at fp16 (main pipeline; RDM restricted to the 20
//      generation emotions before any comparison)
//   B: generation at fp16, alternative sub-parameter bundle
//   C: generation at fp16, protocol-matched bundle
//   D: generation at int8, protocol-matched bundle

#include "emogeo/registry.hpp"
#include "emogeo/rsa.hpp"

#include <array>
#include <filesystem>
#include <string>

namespace emogeo {

struct ConditionSet {
    std::string model_id;
    RDM A, B, C, D;  // A already restricted to the shared 20-emotion order

    void validate() const;  // shared emotion order across all four
};

// Loads the four RDMs from a run directory; a missing condition raises
// ValidationError naming it, an order mismatch raises AlignmentError.
ConditionSet assemble_conditions(const std::filesystem::path& run_dir,
                                 const std::string& model_id);

struct ContrastReport {
    std::string model_id;
    double rho_AC = 0.0;  // method (comprehension vs matched generation), fp16
    double rho_BC = 0.0;  // sub-parameter bundle within fp16 generation
    double rho_CD = 0.0;  // precision (fp16 vs int8), protocol matched
    double rho_AD = 0.0;  // conflated cross-experiment statistic
    double distortion_factor = 0.0;  // rho_AD / rho_CD
    MatD full_matrix;                // 4x4 over (A, B, C, D)

    nlohmann::json to_json() const;
    static ContrastReport from_json(const nlohmann::json& j);
};

ContrastReport contrast_table(const ConditionSet& set);

} // namespace emogeo

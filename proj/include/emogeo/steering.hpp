#pragma once

// Additive intervention along an emotion vector at five strength levels and
// regime classification from the persisted trace.

#include "emogeo/capture.hpp"
#include "emogeo/geometry.hpp"
#include "emogeo/registry.hpp"

#include <array>
#include <string>

namespace emogeo {

struct SteeringTrace {
    std::string model_id;
    int layer = -1;
    std::string emotion;
    std::array<double, 5> strengths{};           // strictly ascending
    std::array<std::string, 5> completions{};
    std::array<double, 5> repetition_scores{};
    std::array<bool, 5> empty_flags{};

    void validate() const;
    nlohmann::json to_json() const;
    static SteeringTrace from_json(const nlohmann::json& j);
};

struct SteeringThresholds {
    double explosive = 0.8;  // repetition score above which a low-strength sample is collapsed
    double coherent = 0.3;   // repetition score below which a sample counts as coherent
};

// Greedy completion with strength * vector added to the residual stream at
// `layer` for every generated position. named_hook backends only.
std::string apply_steering(ModelHandle& handle, const VecF& unit_vector, int layer,
                           double strength, const std::string& prompt,
                           int max_new_tokens = 48);

// Maximum fraction of the whitespace token stream covered by consecutive
// repeats of any single word or bigram; empty text scores 1.0 by convention.
double repetition_score(const std::string& text);

// Total function of (empty_flags, repetition_scores): explosive if either of
// the two lowest strengths is empty or above the explosive threshold;
// surgical if both lowest strengths are coherent; repetitive_collapse
// otherwise.
SteeringRegime classify_regime(const SteeringTrace& trace, const SteeringThresholds& t = {});

// Strength ladder: multipliers x mean residual norm at the layer.
std::array<double, 5> strength_ladder(double mean_residual_norm,
                                      const std::array<double, 5>& multipliers = {2, 4, 6, 8, 10});

SteeringTrace run_steering_trace(ModelHandle& handle, const VecF& unit_vector, int layer,
                                 const std::string& emotion, const std::string& prompt,
                                 const std::array<double, 5>& strengths,
                                 int max_new_tokens = 48);

} // namespace emogeo

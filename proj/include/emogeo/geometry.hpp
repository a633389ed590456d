#pragma once

// Per-model geometric descriptors: cosine RDM, off-diagonal std, anisotropy,
// steering regime label.

#include "emogeo/capture.hpp"
#include "emogeo/comprehension.hpp"
#include "emogeo/registry.hpp"

#include <optional>
#include <string>

namespace emogeo {

enum class SteeringRegime { surgical, repetitive_collapse, explosive, not_available };
std::string to_string(SteeringRegime r);
SteeringRegime steering_regime_from_string(const std::string& s);

// Symmetric cosine-similarity matrix over the set's rows; unit diagonal for
// nonzero rows. A zero-norm row raises ArgumentError naming the emotion.
RDM compute_rdm(const EmotionVectorSet& set);

// Population standard deviation of the upper-triangle entries.
double rdm_std(const RDM& rdm);

// Mean pairwise cosine of the neutral-sentence activations at one layer.
// Any non-finite row raises ExtractionError (anisotropy unavailable there).
double anisotropy(const ActivationMatrix& neutral_rows);

struct AnisotropyAtLayer {
    int layer = -1;
    double value = 0.0;
};

struct GeometryDescriptors {
    std::string model_id;
    double anisotropy = 0.0;
    double rdm_std = 0.0;
    int best_layer = -1;
    double best_layer_pct = 0.0;
    SteeringRegime steering_regime = SteeringRegime::not_available;
    // Reference depths (50%, 75%); null where the layer is non-finite.
    std::optional<double> anisotropy_p50;
    std::optional<double> anisotropy_p75;

    nlohmann::json to_json(const std::string& manifest_id) const;
    static GeometryDescriptors from_json(const nlohmann::json& j);
};

// Assembles the per-model descriptor record; inputs must agree on the layer.
GeometryDescriptors make_descriptors(const std::string& model_id,
                                     const LayerSweep& sweep,
                                     const RDM& best_layer_rdm,
                                     const AnisotropyAtLayer& aniso,
                                     SteeringRegime regime,
                                     std::optional<double> anisotropy_p50 = std::nullopt,
                                     std::optional<double> anisotropy_p75 = std::nullopt);

} // namespace emogeo

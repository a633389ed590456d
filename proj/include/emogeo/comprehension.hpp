#pragma once

// Comprehension-mode extraction: centered per-emotion vectors at every layer
// and best-layer selection (the layer minimizing mean pairwise cosine among
// the 21 centered vectors).

#include "emogeo/capture.hpp"
#include "emogeo/registry.hpp"
#include "emogeo/stimuli.hpp"

#include <map>
#include <optional>
#include <vector>

namespace emogeo {

struct LayerSweep {
    std::vector<std::optional<double>> per_layer_mean_cosine;  // null = unusable layer
    int best_layer = -1;
    double best_layer_pct = 0.0;  // best_layer / n_layers, 0-based index

    nlohmann::json to_json(const std::string& model_id, const std::string& manifest_id) const;
    static LayerSweep from_json(const nlohmann::json& j);
};

// Per-emotion mean over its passages, then subtract the unweighted mean of
// the 21 per-emotion means. Rows flagged non-finite must be excluded by the
// caller; an emotion left with zero rows raises ExtractionError.
EmotionVectorSet build_emotion_vectors(
    const std::map<std::string, std::vector<VecF>>& activations_by_emotion,
    int layer, const ModelRecord& model,
    const EmotionVocabulary& vocab = EmotionVocabulary::canonical());

// Mean cosine over the unordered off-diagonal pairs (upper triangle).
double mean_pairwise_cosine(const MatF& rows);

// Argmin over non-null entries, ties toward the smaller index.
int select_best_layer(const std::vector<std::optional<double>>& per_layer_mean_cosine);

struct SweepResult {
    LayerSweep sweep;
    std::map<int, EmotionVectorSet> sets;          // finite layers only
    std::map<int, ActivationMatrix> neutral;       // neutral-sentence rows per layer
};

// Pure core of the sweep: passage activations per layer (row i belongs to
// passage_emotions[i]), already containing nan flags.
SweepResult sweep_from_activations(const std::map<int, ActivationMatrix>& passage_acts,
                                   const std::vector<std::string>& passage_emotions,
                                   const std::map<int, ActivationMatrix>& neutral_acts,
                                   const ModelRecord& model,
                                   const EmotionVocabulary& vocab = EmotionVocabulary::canonical());

// Full layer sweep over the corpus through a live model handle.
SweepResult sweep_layers(ModelHandle& handle, const CorpusBundle& corpus);

} // namespace emogeo

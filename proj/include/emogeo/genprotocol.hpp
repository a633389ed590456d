#pragma once

// Generation-mode extraction with the eight pinned sub-parameters. Two
// presets: the protocol-matched bundle and the eight-way alternative bundle
// (every field flipped).

#include "emogeo/capture.hpp"
#include "emogeo/registry.hpp"
#include "emogeo/stimuli.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace emogeo {

enum class ExtractionPosition { mid_generation, last_token };
enum class ExtractionLayerRule { middle, best };
enum class Centering { neutral_baseline, global_mean };

std::string to_string(ExtractionPosition p);
std::string to_string(ExtractionLayerRule r);
std::string to_string(Centering c);

struct GenerationProtocol {
    int templates_per_emotion = 5;
    int generations_per_template = 10;
    bool deterministic_decoding = true;
    int max_new_tokens = 256;
    ExtractionPosition extraction_position = ExtractionPosition::mid_generation;
    ExtractionLayerRule extraction_layer = ExtractionLayerRule::middle;
    bool apply_chat_template = true;
    Centering centering = Centering::neutral_baseline;
    Precision precision = Precision::fp16;
    // Stochastic-decoding knobs for the alternative preset.
    double temperature = 1.0;
    double top_p = 0.95;

    static GenerationProtocol matched(Precision precision = Precision::fp16);
    static GenerationProtocol alternative(Precision precision = Precision::fp16);

    nlohmann::json to_json() const;
    static GenerationProtocol from_json(const nlohmann::json& j);
};

// Mid-generation capture index: prompt_len + generated_len // 2.
int mid_generation_position(int prompt_len, int generated_len);
// extraction_layer = middle resolves to n_layers // 2.
int middle_layer(int n_layers);

struct GenSampleRec {
    std::string emotion;  // empty for neutral samples
    int template_idx = 0;
    int gen_idx = 0;
    std::string text;
    bool degenerate = false;  // zero new tokens; excluded from vector building
    int position = -1;        // capture position within the sequence
    VecF activation;
};

struct GenerationRun {
    GenerationProtocol protocol;
    std::string model_id;
    int layer = -1;
    std::vector<std::string> emotion_order;  // the 20-label generation subset
    std::map<std::string, std::vector<GenSampleRec>> per_emotion;
    std::vector<GenSampleRec> neutral;
    int degenerate_count = 0;
};

// Runs the generation pipeline. `best_layer` is consulted only when the
// protocol selects ExtractionLayerRule::best. base_seed feeds the per-sample
// seeds of stochastic decoding and is recorded in the manifest.
GenerationRun run_generation(ModelHandle& handle, const GenerationProtocol& protocol,
                             const CorpusBundle& corpus,
                             std::optional<int> best_layer,
                             std::uint64_t base_seed = 0);

struct LabeledVectors {
    std::vector<std::string> labels;
    MatF vectors;
};

// Per-emotion mean minus the protocol's baseline (neutral mean or global
// mean of emotion means), scaled to unit norm.
LabeledVectors build_generation_vectors(const GenerationRun& run);

RDM generation_rdm(const LabeledVectors& vectors, const std::string& model_id, int layer);

// Persists samples.jsonl + activations.f32 + vectors.f32 + rdm.json under
// run_dir/gen/<condition>/.
std::filesystem::path persist_generation_run(const GenerationRun& run,
                                             const LabeledVectors& vectors,
                                             const RDM& rdm,
                                             const std::filesystem::path& run_dir,
                                             const std::string& condition,
                                             const RunManifest& manifest);

} // namespace emogeo

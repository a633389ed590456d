#pragma once

// Canonical data model, run-directory layout and serialization for every
// artifact the pipeline produces.
//
// Run directory layout:
//   runs/<model_slug>/
//     meta.json                     run manifest + model record
//     sweep.json                    per-layer mean cosines (nulls kept), best layer
//     descriptors.json
//     layers/<L>/vectors.f32        21 x d_model, row-major little-endian f32
//     layers/<L>/meta.json          sidecar: shape, emotion order, manifest id
//     layers/<L>/rdm.json
//     neutral/<L>/vectors.f32       20 neutral-sentence activations per layer
//     gen/<COND>/...                generation runs (see genprotocol)
//     steering/<emotion>.json
//     equivalence_report.json
//     decomposition_report.json

#include "emogeo/common.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace emogeo {

enum class Variant { base, instruct };
enum class BackendKind { named_hook, hidden_state_sequence };
enum class Precision { fp16, bf16, fp32, int8 };

std::string to_string(Variant v);
std::string to_string(BackendKind k);
std::string to_string(Precision p);
Variant variant_from_string(const std::string& s);
BackendKind backend_from_string(const std::string& s);
Precision precision_from_string(const std::string& s);

// Identity + architecture metadata for one model; mirrors a model-table row.
struct ModelRecord {
    std::string model_id;
    std::string family;
    Variant variant = Variant::base;
    double size_b = 0.0;   // parameters in billions
    int n_layers = 0;
    int d_model = 0;
    BackendKind backend_kind = BackendKind::named_hook;
    Precision precision = Precision::fp16;

    void validate() const;
    nlohmann::json to_json() const;
    static ModelRecord from_json(const nlohmann::json& j);
};

// Optional geometric-descriptor columns carried by the bundled model table.
struct TableDescriptors {
    std::optional<int> best_layer;
    std::optional<double> best_layer_pct;  // stored as a fraction in [0,1)
    std::optional<double> anisotropy;
    std::optional<double> rdm_std;
};

struct ModelTableRow {
    ModelRecord record;
    TableDescriptors descriptors;
};

// Accepts CSV or JSON with the model-table schema; duplicate model_id rejected.
std::vector<ModelTableRow> load_model_table(const std::filesystem::path& path);

// Provenance record referenced by every persisted artifact.
struct RunManifest {
    std::string manifest_id;
    std::string created_at;
    std::map<std::string, std::string> software;
    std::string hardware;
    std::string precision;
    std::string corpus_hash;
    std::vector<std::uint64_t> random_seeds;

    static RunManifest make(Precision precision, const std::string& corpus_hash,
                            std::vector<std::uint64_t> seeds = {});
    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

// 21 centered emotion vectors at one layer of one model.
struct EmotionVectorSet {
    ModelRecord model;
    int layer = 0;
    std::vector<std::string> emotion_order;
    MatF vectors;          // one row per emotion
    bool centered = false;

    void validate() const;
};

// Cosine-similarity matrix over a labeled vector set plus its off-diagonal
// summary. Comprehension RDMs are 21x21; decomposition compares 20x20
// restrictions, so the size is carried by emotion_order.
struct RDM {
    std::string model_id;
    int layer = 0;
    std::vector<std::string> emotion_order;
    MatD matrix;
    double off_diag_std = 0.0;
    bool contains_nan = false;

    void validate() const;  // symmetry 1e-6, unit diagonal 1e-5, recomputable std
    // Explicit restriction step: keep only the named labels, preserving order.
    RDM restricted(const std::vector<std::string>& keep) const;
    nlohmann::json to_json() const;
    static RDM from_json(const nlohmann::json& j);
};

std::string model_slug(const std::string& model_id);
std::filesystem::path run_dir_for(const std::filesystem::path& root, const std::string& model_id);

// Writes layers/<L>/vectors.f32 + meta.json sidecar under run_dir and returns
// the layer directory. Round-trips bitwise. Rejects sets violating invariants.
std::filesystem::path persist_vector_set(const EmotionVectorSet& set,
                                         const std::filesystem::path& run_dir,
                                         const RunManifest& manifest);
EmotionVectorSet load_vector_set(const std::filesystem::path& layer_dir);

// Generic labeled f32 matrix persistence (neutral activations, generation
// vectors) sharing the vectors.f32 + sidecar idiom.
void persist_matrix(const MatF& rows, const std::vector<std::string>& labels,
                    const std::filesystem::path& dir, const RunManifest& manifest,
                    const nlohmann::json& extra_meta = {});
std::pair<MatF, std::vector<std::string>> load_matrix(const std::filesystem::path& dir);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

// Exclusive ownership of a run directory while an extractor writes into it.
class RunDirLock {
public:
    explicit RunDirLock(const std::filesystem::path& run_dir);
    ~RunDirLock();
    RunDirLock(const RunDirLock&) = delete;
    RunDirLock& operator=(const RunDirLock&) = delete;

private:
    std::filesystem::path lock_path_;
};

std::string sha256_hex(const std::string& bytes);

} // namespace emogeo

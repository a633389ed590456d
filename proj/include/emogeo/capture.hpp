#pragma once

// Uniform activation-capture abstraction over the two backend styles.
// named_hook reads the post-block residual through registered hooks;
// hidden_state_sequence reads element N+1 of the collected hidden-state
// sequence (the +1 accounting for the embedding at index 0).

#include "emogeo/common.hpp"
#include "emogeo/model.hpp"
#include "emogeo/registry.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace emogeo {

enum class PositionPolicy { last_content_token, explicit_index };

struct CaptureRequest {
    std::string text;
    std::vector<int> layers;
    PositionPolicy policy = PositionPolicy::last_content_token;
    int explicit_index = -1;
    bool apply_chat_template = false;
};

struct ActivationMatrix {
    std::string model_id;
    int layer = -1;
    MatF rows;                         // one d_model vector per input item
    std::vector<std::uint8_t> nan_flags;  // true iff the row has a non-finite value

    int n_rows() const { return static_cast<int>(rows.rows()); }
    bool all_finite() const;
    void append_row(const VecF& v);
};

// Index of the last content token; throws ArgumentError on an all-padding mask.
int last_content_position(const std::vector<int>& attention_mask);

// Backend-specific capture locus for 0-based layer N:
// named_hook -> post-block residual of block N (returns N);
// hidden_state_sequence -> hidden-state sequence element N+1.
int map_layer_locus(BackendKind kind, int layer, int n_layers);

class ModelHandle {
public:
    // Resolves a model id to loadable weights at the requested precision.
    // Only the built-in toy family is executable in-process; other ids raise
    // CapabilityError describing the external capture route.
    static std::unique_ptr<ModelHandle> open(const std::string& model_id,
                                             BackendKind backend,
                                             Precision precision);

    const ModelRecord& record() const { return record_; }
    BackendKind backend() const { return record_.backend_kind; }

    // One text -> one row per requested layer.
    std::map<int, ActivationMatrix> capture(const CaptureRequest& request);
    // Many texts, one forward pass each (comprehension is unbatched).
    std::map<int, ActivationMatrix> capture_batch(const std::vector<std::string>& texts,
                                                  const std::vector<int>& layers,
                                                  PositionPolicy policy,
                                                  bool apply_chat_template);

    GenOutput generate_text(const std::string& prompt, const GenOptions& opts,
                            bool apply_chat_template);

    const ToyTransformer& engine() const { return *engine_; }

private:
    ModelHandle(ModelRecord record, std::unique_ptr<ToyTransformer> engine);
    std::vector<int> encode_for(const std::string& text, bool apply_chat_template) const;

    ModelRecord record_;
    std::unique_ptr<ToyTransformer> engine_;
};

} // namespace emogeo

#pragma once

// Deterministic reference transformer used for desk-scale runs: a pre-norm
// decoder with seeded weights, a byte-level tokenizer, KV-cached generation
// and precision emulation (fp16/bf16 activation+weight rounding, int8
// weight quantization). Model ids under the "toy/" prefix resolve here;
// anything else must be captured externally and fed in through the file
// interfaces or the python bindings.

#include "emogeo/common.hpp"
#include "emogeo/registry.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace emogeo {

float round_fp16(float x);  // IEEE half round-trip; overflows to inf
float round_bf16(float x);
float apply_precision(float x, Precision p);

struct TokenizerIds {
    int pad = 0, unk = 1, bos = 2, eos = 3, user = 4, assistant = 5;
    int byte_base = 6;  // byte b maps to byte_base + b
    int vocab = 6 + 256;
};

// Lossless byte-level tokenizer shared by every toy model.
class ByteTokenizer {
public:
    std::vector<int> encode(const std::string& text, bool add_bos = true) const;
    std::string decode(const std::vector<int>& ids) const;  // specials dropped
    const TokenizerIds& ids() const { return ids_; }

private:
    TokenizerIds ids_;
};

struct ToyConfig {
    std::string name;
    int n_layers = 0;
    int d_model = 0;
    int n_heads = 0;
    int d_ff = 0;
    std::uint64_t seed = 0;
    bool instruct = false;
    // Residual blow-up knobs for the fp16-unstable family: residual scaled by
    // `residual_scale` after every block index >= `residual_scale_from`.
    int residual_scale_from = -1;
    float residual_scale = 1.0f;
};

struct GenOptions {
    int max_new_tokens = 64;
    bool greedy = true;
    double temperature = 1.0;
    double top_p = 0.95;
    std::uint64_t seed = 0;          // used when !greedy
    int capture_layer = -1;          // residual stream recorded at this layer if >= 0
    // Additive steering: strength * vector added to the residual at
    // steer_layer for every generated position.
    int steer_layer = -1;
    VecF steer_vector;
    float steer_strength = 0.0f;
};

struct GenOutput {
    std::vector<int> prompt_ids;
    std::vector<int> generated_ids;  // excludes eos
    std::string text;                // decoded generated continuation
    bool hit_eos = false;
    MatF captured;                   // (prompt+generated) x d at capture_layer
};

// Hook invoked after each block with the mutable residual stream
// (positions x d_model). `layer` is the 0-based block index.
using ResidualHook = std::function<void(int layer, MatF& residual)>;

class ToyTransformer {
public:
    ToyTransformer(const ToyConfig& cfg, Precision precision);

    const ToyConfig& config() const { return cfg_; }
    Precision precision() const { return precision_; }
    const ByteTokenizer& tokenizer() const { return tok_; }

    // Full-sequence forward. With `collect_hidden_states`, returns the
    // n_layers+1 residual sequence (index 0 = embeddings, index k+1 = after
    // block k); otherwise returns only the final residual.
    std::vector<MatF> forward(const std::vector<int>& ids, bool collect_hidden_states,
                              const ResidualHook& hook = nullptr) const;

    GenOutput generate(const std::vector<int>& prompt_ids, const GenOptions& opts) const;

    std::vector<int> chat_wrap(const std::vector<int>& body_ids) const;

private:
    struct Block;
    VecF rmsnorm(const VecF& x, const VecF& gain) const;
    void forward_position(const std::vector<int>& ids, size_t pos,
                          std::vector<MatF>& kcache, std::vector<MatF>& vcache,
                          MatF* residual_log, const GenOptions* gen_opts,
                          VecF& out_final) const;

    ToyConfig cfg_;
    Precision precision_;
    ByteTokenizer tok_;
    MatF embed_;                 // vocab x d
    std::vector<Block> blocks_;
    VecF final_gain_;
};

// Built-in desk-scale model registry.
bool is_toy_model(const std::string& model_id);
std::vector<std::string> toy_model_ids();
ModelRecord toy_model_record(const std::string& model_id, Precision precision);
ToyConfig toy_model_config(const std::string& model_id);

} // namespace emogeo

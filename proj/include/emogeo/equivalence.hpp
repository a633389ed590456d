#pragma once

// Cross-backend equivalence check: extract the full 21-emotion vector set
// through both capture routes on one model and quantify agreement.

#include "emogeo/capture.hpp"
#include "emogeo/registry.hpp"
#include "emogeo/stimuli.hpp"

#include <string>
#include <vector>

namespace emogeo {

// ||a - b||_F / ||a||_F; the first argument is the reference extraction.
double relative_frobenius(const MatD& a, const MatD& b);

struct EquivalenceReport {
    std::string model_id;
    int layer = -1;
    std::string precision;
    std::vector<std::string> emotion_order;
    std::vector<double> per_emotion_cosine;
    double cosine_mean = 0.0;
    double cosine_min = 0.0;
    double cosine_max = 0.0;
    double rdm_spearman = 0.0;
    double rdm_relative_frobenius = 0.0;

    void validate() const;  // min <= mean <= max; relative_frobenius >= 0
    nlohmann::json to_json() const;
    static EquivalenceReport from_json(const nlohmann::json& j);
};

// Runs the comprehension extraction twice -- once per backend style -- at
// locus-matched positions with identical corpus and precision. fp32 by
// default so backend disagreement is not confounded with precision noise.
EquivalenceReport run_equivalence(const std::string& model_id, int layer,
                                  const CorpusBundle& corpus,
                                  Precision precision = Precision::fp32);

} // namespace emogeo

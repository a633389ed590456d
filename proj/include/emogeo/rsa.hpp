#pragma once

// Cross-model representational similarity: tie-handled rank correlation,
// RDM-of-RDMs with anisotropy reliability flags, size correlations, and the
// linear-normalization invariance demonstrator.

#include "emogeo/geometry.hpp"
#include "emogeo/registry.hpp"

#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace emogeo {

// Average ranks (1-based) with tie groups sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> xs);

// Rank correlation with average-rank tie handling; equals Pearson of the
// rank vectors. Constant input raises ArgumentError (never silently 0).
double spearman(std::span<const double> xs, std::span<const double> ys);
double pearson(std::span<const double> xs, std::span<const double> ys);

enum class CorrMethod { spearman, pearson };

// Upper-triangle entries (i < j) row by row.
std::vector<double> upper_triangle(const MatD& m);

// Correlation over the upper-triangle entries of two RDMs with identical
// emotion order; mismatched order raises AlignmentError.
double rdm_similarity(const RDM& a, const RDM& b, CorrMethod method = CorrMethod::spearman);

enum class Reliability { ok, borderline, unreliable };
std::string to_string(Reliability r);

struct ReliabilityThresholds {
    double borderline = 0.90;   // flag when anisotropy in (borderline, unreliable]
    double unreliable = 0.95;   // flag when anisotropy > unreliable
    void validate() const;
};

Reliability classify_reliability(double anisotropy, const ReliabilityThresholds& t = {});

struct RdmOfRdmsEntry {
    ModelRecord record;
    RDM rdm;
    double anisotropy = 0.0;
};

struct RdmOfRdms {
    std::vector<std::string> model_order;
    MatD matrix;                          // pairwise Spearman values
    std::vector<Reliability> reliability;

    nlohmann::json to_json() const;
};

RdmOfRdms rdm_of_rdms(const std::vector<RdmOfRdmsEntry>& entries,
                      const ReliabilityThresholds& thresholds = {});

// Entrywise (rdm - (1 - anisotropy)) / std(rdm). Retained solely to
// demonstrate that rank and Pearson similarities are invariant under it.
RDM linear_normalize_rdm(const RDM& rdm, double anisotropy);

enum class SizePredictor { size_b, d_model };
enum class SizeOutcome { anisotropy, rdm_std, best_layer_pct };
std::string to_string(SizePredictor p);
std::string to_string(SizeOutcome o);

struct SizeCorrelationRow {
    SizePredictor predictor;
    SizeOutcome outcome;
    double rho = 0.0;
    double p_uncorrected = 0.0;
    int n = 0;
};

// Spearman rho for every (predictor, outcome) pair over models with finite
// descriptors; p via the t-approximation on n-2 degrees of freedom,
// reported uncorrected. Needs >= 4 usable models.
std::vector<SizeCorrelationRow> size_correlations(const std::vector<ModelTableRow>& rows);

nlohmann::json size_correlations_json(const std::vector<SizeCorrelationRow>& rows);

} // namespace emogeo

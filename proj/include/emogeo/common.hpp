#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace emogeo {

inline constexpr const char* kVersion = "0.1.0";

// Row-major so activation matrices map directly onto the on-disk f32 layout.
using MatF = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatD = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using VecF = Eigen::VectorXf;
using VecD = Eigen::VectorXd;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invariant or precondition violated by data (bad corpus, bad vector set, bad config).
class ValidationError : public Error { public: using Error::Error; };
// Malformed input file (CSV/JSON), carries row/field context in the message.
class ParseError : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };
// Bad argument to an operation (layer out of range, shape mismatch, ...).
class ArgumentError : public Error { public: using Error::Error; };
// Requested operation not supported by this backend or model.
class CapabilityError : public Error { public: using Error::Error; };
// Extraction pipeline failure (no finite passages, all-null sweep, ...).
class ExtractionError : public Error { public: using Error::Error; };
// Inputs that must describe the same model/layer do not.
class ConsistencyError : public Error { public: using Error::Error; };
// Emotion orders differ where they must match; never silently re-ordered.
class AlignmentError : public Error { public: using Error::Error; };

} // namespace emogeo

// End-to-end pipelines: exponential growth coefficients of integer
// sequences and (anti-)limits of series.

#ifndef STREAMACCEL_ESTIMATORS_HPP
#define STREAMACCEL_ESTIMATORS_HPP

#include "streamaccel/sequences.hpp"
#include "streamaccel/transforms.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace streamaccel {

/// How ratio_stream lines up positions when the sequence starts with zeros.
enum class RatioAlignment {
    /// Skip the leading run of zeros; ratio 0 is the first with a nonzero denominator.
    DropLeadingZeros,
    /// Keep every position; the leading ratios are Undefined and later
    /// positions keep their original index weights.
    KeepPositions,
};

/// Element i is s_{i+1} / s_i (after the alignment rule).
NumStream ratio_stream(const NumStream& s, RatioAlignment align = RatioAlignment::DropLeadingZeros);

/// take-last reads the final defined element of the transform of an n-term
/// prefix; at-index reads one element of the transform of the whole input.
struct EvalMode {
    std::optional<std::size_t> index;

    static EvalMode take_last() { return {}; }
    static EvalMode at_index(std::size_t i) { return {i}; }
    bool is_take_last() const { return !index.has_value(); }

    friend bool operator==(const EvalMode&, const EvalMode&) = default;
};

struct EstimateOptions {
    int digits = 10;
    EvalMode mode = EvalMode::take_last();
    RatioAlignment alignment = RatioAlignment::DropLeadingZeros;
};

struct AccelerationReport {
    TransformSpec spec;
    /// Input terms consumed.
    std::size_t terms_used = 0;
    Element estimate;
    std::string rendered;
    /// Leading significant digits shared with the run on one term (or one index) fewer.
    int digits_stable = 0;

    bool defined() const { return estimate.defined(); }
    friend bool operator==(const AccelerationReport&, const AccelerationReport&) = default;
};

class InsufficientTerms : public std::runtime_error {
public:
    InsufficientTerms(std::size_t wanted, std::size_t available);
};

/// Growth coefficient a in s_n ~ a^n f(n): accelerate s_{n+1}/s_n over n
/// terms. An Undefined estimate means the transform produced nothing usable.
AccelerationReport exp_coeff_ac(const TransformSpec& spec, const NumStream& sequence, std::size_t n,
                                const EstimateOptions& opts = {});
AccelerationReport exp_coeff_ac(const TransformSpec& spec, const SequenceSource& source, std::size_t n,
                                const EstimateOptions& opts = {});

/// Limit (or anti-limit) of the series with the given terms, from n partial sums.
AccelerationReport sum_series_ac(const TransformSpec& spec, const NumStream& terms, std::size_t n,
                                 const EstimateOptions& opts = {});

/// Applies the transform to the sequence itself (no ratios, no partial sums).
AccelerationReport accelerate(const TransformSpec& spec, const NumStream& sequence, std::size_t n,
                              const EstimateOptions& opts = {});

/// Count of leading significant digits on which two renderings agree;
/// 0 when either is Undefined or their decimal exponents differ.
int shared_digits(const Element& a, const Element& b, int digits);

}  // namespace streamaccel

#endif  // STREAMACCEL_ESTIMATORS_HPP

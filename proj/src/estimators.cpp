#include "streamaccel/estimators.hpp"

#include <functional>
#include <mutex>

namespace streamaccel {

namespace {

// Offset of the first nonzero (or Undefined) element; found on first use so
// infinite inputs stay lazy.
class LeadingZeros {
public:
    explicit LeadingZeros(NumStream s) : s_(std::move(s)) {}

    std::size_t count()
    {
        std::call_once(once_, [this] {
            std::size_t z = 0;
            while (s_.extent().contains(z) && s_.at(z).is_zero())
                ++z;
            count_ = z;
        });
        return count_;
    }

private:
    NumStream s_;
    std::once_flag once_;
    std::size_t count_ = 0;
};

}  // namespace

NumStream ratio_stream(const NumStream& s, RatioAlignment align)
{
    if (align == RatioAlignment::KeepPositions)
        return zip_with(div, stream_tail(s), s);

    auto zeros = std::make_shared<LeadingZeros>(s);
    Extent ext = s.is_finite() ? s.extent().shrink(zeros->count() + 1) : Extent::infinite();
    return NumStream::generate(ext, [s, zeros](std::size_t i) {
        const std::size_t k = zeros->count() + i;
        return s.at(k + 1) / s.at(k);
    });
}

InsufficientTerms::InsufficientTerms(std::size_t wanted, std::size_t available)
    : std::runtime_error("requested " + std::to_string(wanted) + " terms but the input has only " +
                         std::to_string(available))
{
}

int shared_digits(const Element& a, const Element& b, int digits)
{
    if (!a || !b)
        return 0;
    SignificantDigits x = significant_digits(a.value(), digits);
    SignificantDigits y = significant_digits(b.value(), digits);
    if (x.negative != y.negative || x.exponent != y.exponent)
        return 0;
    int same = 0;
    while (same < digits && x.digits[static_cast<std::size_t>(same)] == y.digits[static_cast<std::size_t>(same)])
        ++same;
    return same;
}

namespace {

using Prepare = std::function<NumStream(const NumStream&)>;

AccelerationReport run_pipeline(const TransformSpec& spec, const NumStream& input, std::size_t n,
                                std::size_t min_terms, const EstimateOptions& opts, const Prepare& prepare)
{
    spec.validate();
    AccelerationReport report;
    report.spec = spec;

    if (opts.mode.index) {
        const std::size_t i = *opts.mode.index;
        NumStream seen = observe(input);
        NumStream out = apply(spec, prepare(seen));
        report.estimate = out.at(i);
        report.terms_used = seen.forced();
        if (i > 0)
            report.digits_stable = shared_digits(report.estimate, out.at(i - 1), opts.digits);
    } else {
        if (n < min_terms)
            throw std::invalid_argument("at least " + std::to_string(min_terms) + " terms are required");
        if (auto len = input.extent().length(); len && *len < n)
            throw InsufficientTerms(n, *len);

        auto estimate_with = [&](std::size_t terms) {
            return last_defined(apply(spec, prepare(take(input, terms))));
        };
        report.estimate = estimate_with(n);
        report.terms_used = n;
        if (n > min_terms)
            report.digits_stable = shared_digits(report.estimate, estimate_with(n - 1), opts.digits);
    }
    report.rendered = render_decimal(report.estimate, opts.digits);
    return report;
}

}  // namespace

AccelerationReport exp_coeff_ac(const TransformSpec& spec, const NumStream& sequence, std::size_t n,
                                const EstimateOptions& opts)
{
    return run_pipeline(spec, sequence, n, 2, opts,
                        [align = opts.alignment](const NumStream& u) { return ratio_stream(u, align); });
}

AccelerationReport exp_coeff_ac(const TransformSpec& spec, const SequenceSource& source, std::size_t n,
                                const EstimateOptions& opts)
{
    return exp_coeff_ac(spec, source.open(), n, opts);
}

AccelerationReport sum_series_ac(const TransformSpec& spec, const NumStream& terms, std::size_t n,
                                 const EstimateOptions& opts)
{
    return run_pipeline(spec, terms, n, 1, opts, [](const NumStream& t) { return partial_sums(t); });
}

AccelerationReport accelerate(const TransformSpec& spec, const NumStream& sequence, std::size_t n,
                              const EstimateOptions& opts)
{
    return run_pipeline(spec, sequence, n, 1, opts, [](const NumStream& s) { return s; });
}

}  // namespace streamaccel

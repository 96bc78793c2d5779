// Lazy, memoizing, possibly infinite streams of Elements.
//
// Positions are 0-based. Where a formula is written with a math index
// n = 1, 2, ..., stream position i carries n = i + 1.

#ifndef STREAMACCEL_STREAM_HPP
#define STREAMACCEL_STREAM_HPP

#include "streamaccel/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace streamaccel {

/// Finite(length) or Infinite.
class Extent {
public:
    static Extent infinite() { return Extent(); }
    static Extent finite(std::size_t n) { return Extent(n); }

    bool is_finite() const { return length_.has_value(); }
    std::optional<std::size_t> length() const { return length_; }
    bool contains(std::size_t i) const { return !length_ || i < *length_; }

    /// Finite(L) -> Finite(max(L - k, 0)); Infinite stays Infinite.
    Extent shrink(std::size_t k) const
    {
        if (!length_)
            return *this;
        return Extent(*length_ > k ? *length_ - k : 0);
    }

    friend Extent min(Extent a, Extent b)
    {
        if (!a.length_)
            return b;
        if (!b.length_)
            return a;
        return Extent(std::min(*a.length_, *b.length_));
    }

    friend bool operator==(const Extent&, const Extent&) = default;

private:
    Extent() = default;
    explicit Extent(std::size_t n) : length_(n) {}

    std::optional<std::size_t> length_;
};

enum class Memo {
    Cached,  // each cell computed at most once
    None,    // cheap closed-form producers
};

namespace detail {
class StreamNode;
}

class NumStream {
public:
    /// Random-access producer: element i from index i alone (plus upstream streams).
    using Producer = std::function<Element(std::size_t)>;
    /// Sequential producer: element i from the already computed prefix 0..i-1.
    using Unfolder = std::function<Element(std::size_t, std::span<const Element>)>;

    static NumStream generate(Extent extent, Producer produce, Memo memo = Memo::Cached);
    static NumStream unfold(Extent extent, Unfolder next);
    static NumStream from_values(std::vector<Element> values);

    /// Element i; Undefined(OutOfRange) past a finite end. Thread-safe.
    Element at(std::size_t i) const;

    Extent extent() const;
    bool is_finite() const { return extent().is_finite(); }

    /// First n elements (clamped to the extent).
    std::vector<Element> prefix(std::size_t n) const;
    /// Every element of a finite stream.
    std::vector<Element> to_vector() const;

    /// One past the highest index ever requested in range, 0 if none.
    std::size_t forced() const;

private:
    explicit NumStream(std::shared_ptr<detail::StreamNode> node) : node_(std::move(node)) {}

    std::shared_ptr<detail::StreamNode> node_;
};

using BinaryOp = std::function<Element(const Element&, const Element&)>;
using UnaryOp = std::function<Element(const Element&)>;

/// Element i is f(a_i, b_i); extent is the shorter of the two.
NumStream zip_with(BinaryOp f, const NumStream& a, const NumStream& b);
NumStream map(UnaryOp f, const NumStream& s);

NumStream stream_tail(const NumStream& s);
NumStream iota(Scalar start, Scalar step);
NumStream repeat_const(Scalar c);
NumStream take(const NumStream& s, std::size_t n);

/// Last Defined element of a finite stream, Undefined(OutOfRange) if there is none.
Element last_defined(const NumStream& s);

/// Forward difference: element i is s_{i+1} - s_i.
NumStream forward_difference(const NumStream& s);

/// Running sums: element i is t_0 + ... + t_i.
NumStream partial_sums(const NumStream& t);

/// Pass-through view whose forced() reports how far `s` was read through it.
NumStream observe(const NumStream& s);

}  // namespace streamaccel

#endif  // STREAMACCEL_STREAM_HPP

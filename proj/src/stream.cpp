#include "streamaccel/stream.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace streamaccel {

namespace detail {

class StreamNode {
public:
    explicit StreamNode(Extent extent) : extent_(extent) {}
    virtual ~StreamNode() = default;

    Element at(std::size_t i)
    {
        if (!extent_.contains(i))
            return Element::undefined(UndefinedReason::OutOfRange);
        std::size_t seen = forced_.load(std::memory_order_relaxed);
        while (seen < i + 1 && !forced_.compare_exchange_weak(seen, i + 1, std::memory_order_relaxed)) {
        }
        return compute(i);
    }

    Extent extent() const { return extent_; }
    std::size_t forced() const { return forced_.load(std::memory_order_relaxed); }

protected:
    virtual Element compute(std::size_t i) = 0;

private:
    Extent extent_;
    std::atomic<std::size_t> forced_{0};
};

namespace {

class RandomAccessNode final : public StreamNode {
public:
    RandomAccessNode(Extent extent, NumStream::Producer produce, Memo memo)
        : StreamNode(extent), produce_(std::move(produce)), memo_(memo)
    {
    }

protected:
    Element compute(std::size_t i) override
    {
        if (memo_ == Memo::None)
            return produce_(i);
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(i); it != cache_.end())
                return it->second;
        }
        // Computed outside the lock so recursive upstream reads never hold it;
        // a concurrent duplicate loses to the first stored value.
        Element value = produce_(i);
        std::lock_guard lock(mutex_);
        return cache_.try_emplace(i, std::move(value)).first->second;
    }

private:
    NumStream::Producer produce_;
    Memo memo_;
    std::mutex mutex_;
    std::unordered_map<std::size_t, Element> cache_;
};

class UnfoldNode final : public StreamNode {
public:
    UnfoldNode(Extent extent, NumStream::Unfolder next) : StreamNode(extent), next_(std::move(next)) {}

protected:
    Element compute(std::size_t i) override
    {
        std::lock_guard lock(mutex_);
        while (cache_.size() <= i) {
            const std::size_t k = cache_.size();
            Element e = next_(k, std::span<const Element>(cache_.data(), k));
            cache_.push_back(std::move(e));
        }
        return cache_[i];
    }

private:
    NumStream::Unfolder next_;
    std::mutex mutex_;
    std::vector<Element> cache_;
};

class VectorNode final : public StreamNode {
public:
    explicit VectorNode(std::vector<Element> values)
        : StreamNode(Extent::finite(values.size())), values_(std::move(values))
    {
    }

protected:
    Element compute(std::size_t i) override { return values_[i]; }

private:
    const std::vector<Element> values_;
};

}  // namespace
}  // namespace detail

NumStream NumStream::generate(Extent extent, Producer produce, Memo memo)
{
    return NumStream(std::make_shared<detail::RandomAccessNode>(extent, std::move(produce), memo));
}

NumStream NumStream::unfold(Extent extent, Unfolder next)
{
    return NumStream(std::make_shared<detail::UnfoldNode>(extent, std::move(next)));
}

NumStream NumStream::from_values(std::vector<Element> values)
{
    return NumStream(std::make_shared<detail::VectorNode>(std::move(values)));
}

Element NumStream::at(std::size_t i) const { return node_->at(i); }

Extent NumStream::extent() const { return node_->extent(); }

std::size_t NumStream::forced() const { return node_->forced(); }

std::vector<Element> NumStream::prefix(std::size_t n) const
{
    if (auto len = extent().length())
        n = std::min(n, *len);
    std::vector<Element> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(at(i));
    return out;
}

std::vector<Element> NumStream::to_vector() const
{
    auto len = extent().length();
    if (!len)
        throw std::logic_error("to_vector on an infinite stream");
    return prefix(*len);
}

NumStream zip_with(BinaryOp f, const NumStream& a, const NumStream& b)
{
    return NumStream::generate(min(a.extent(), b.extent()),
                               [f = std::move(f), a, b](std::size_t i) { return f(a.at(i), b.at(i)); });
}

NumStream map(UnaryOp f, const NumStream& s)
{
    return NumStream::generate(s.extent(), [f = std::move(f), s](std::size_t i) { return f(s.at(i)); });
}

NumStream stream_tail(const NumStream& s)
{
    return NumStream::generate(s.extent().shrink(1), [s](std::size_t i) { return s.at(i + 1); }, Memo::None);
}

NumStream iota(Scalar start, Scalar step)
{
    return NumStream::generate(
        Extent::infinite(),
        [start = std::move(start), step = std::move(step)](std::size_t i) {
            return Element(start + step * Scalar(static_cast<long>(i)));
        },
        Memo::None);
}

NumStream repeat_const(Scalar c)
{
    return NumStream::generate(Extent::infinite(), [c = std::move(c)](std::size_t) { return Element(c); },
                               Memo::None);
}

NumStream take(const NumStream& s, std::size_t n)
{
    return NumStream::generate(min(s.extent(), Extent::finite(n)), [s](std::size_t i) { return s.at(i); },
                               Memo::None);
}

Element last_defined(const NumStream& s)
{
    auto len = s.extent().length();
    if (!len)
        throw std::logic_error("last_defined on an infinite stream");
    for (std::size_t i = *len; i-- > 0;) {
        Element e = s.at(i);
        if (e)
            return e;
    }
    return Element::undefined(UndefinedReason::OutOfRange);
}

NumStream forward_difference(const NumStream& s)
{
    return NumStream::generate(s.extent().shrink(1), [s](std::size_t i) { return s.at(i + 1) - s.at(i); });
}

NumStream partial_sums(const NumStream& t)
{
    return NumStream::unfold(t.extent(), [t](std::size_t i, std::span<const Element> prefix) {
        return i == 0 ? t.at(0) : prefix.back() + t.at(i);
    });
}

NumStream observe(const NumStream& s)
{
    return NumStream::generate(s.extent(), [s](std::size_t i) { return s.at(i); }, Memo::None);
}

}  // namespace streamaccel

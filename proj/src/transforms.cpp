#include "streamaccel/transforms.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace streamaccel {

void TransformSpec::validate() const
{
    if (order < 0)
        throw std::invalid_argument("transform order must be >= 0");
    if (method == Method::Levin && order > 2)
        throw std::invalid_argument("Levin transform is available for orders 0, 1 and 2 only; use ealg for higher orders");
}

std::string_view to_string(Kind k)
{
    switch (k) {
    case Kind::T: return "t";
    case Kind::U: return "u";
    case Kind::V: return "v";
    }
    return "?";
}

std::string_view to_string(Method m) { return m == Method::EAlg ? "ealg" : "levin"; }

std::string_view to_string(GConvention g) { return g == GConvention::TextFormula ? "text" : "code"; }

std::string to_string(const TransformSpec& spec)
{
    std::string out(to_string(spec.method));
    out += ' ';
    out += to_string(spec.kind);
    out += ' ';
    out += std::to_string(spec.order);
    if (spec.method == Method::EAlg) {
        out += " g=";
        out += to_string(spec.g_convention);
    }
    return out;
}

namespace {

Element index_weight(std::size_t i, long offset = 0)
{
    return Element(Scalar(static_cast<long>(i) + offset));
}

}  // namespace

NumStream delta(Kind kind, const NumStream& s)
{
    NumStream ds = forward_difference(s);
    switch (kind) {
    case Kind::T:
        return ds;
    case Kind::U:
        return NumStream::generate(ds.extent(), [ds](std::size_t i) { return ds.at(i) * index_weight(i, 1); });
    case Kind::V: {
        NumStream d2s = forward_difference(ds);
        return NumStream::generate(d2s.extent(), [ds, d2s](std::size_t i) {
            return (ds.at(i + 1) * ds.at(i)) / d2s.at(i);
        });
    }
    }
    throw std::invalid_argument("unknown kind");
}

namespace {

NumStream g0_from_remainder(const NumStream& r, int j, GConvention conv)
{
    const auto power = static_cast<unsigned long>(j - 1);
    return NumStream::generate(r.extent(), [r, power, conv](std::size_t i) {
        Element n_pow = int_pow(Scalar(static_cast<long>(i) + 1), power);
        return conv == GConvention::TextFormula ? r.at(i) / n_pow : n_pow / r.at(i);
    });
}

// Shares every (k, j) auxiliary stream of one E-algorithm instance so each
// cell of the triangular scheme is evaluated once.
class EAlgTable {
public:
    EAlgTable(Kind kind, const NumStream& s, GConvention conv) : s_(s), r_(delta(kind, s)), conv_(conv) {}

    const NumStream& g(int k, int j)
    {
        auto key = std::make_pair(k, j);
        if (auto it = g_.find(key); it != g_.end())
            return it->second;
        NumStream out = k == 0 ? g0_from_remainder(r_, j, conv_) : eliminate(g(k - 1, j), g(k - 1, k));
        return g_.emplace(key, std::move(out)).first->second;
    }

    NumStream e(int k)
    {
        NumStream out = s_;
        for (int level = 1; level <= k; ++level)
            out = eliminate(out, g(level - 1, level));
        return out;
    }

private:
    NumStream s_;
    NumStream r_;
    GConvention conv_;
    std::map<std::pair<int, int>, NumStream> g_;
};

void check_order(int k, int j)
{
    if (k < 0)
        throw std::invalid_argument("order k must be >= 0");
    if (j < 1)
        throw std::invalid_argument("g index j must be >= 1");
}

}  // namespace

NumStream eliminate(const NumStream& a, const NumStream& b)
{
    Extent ext = min(a.extent(), b.extent()).shrink(1);
    return NumStream::generate(ext, [a, b](std::size_t i) {
        Element ai = a.at(i);
        Element da = a.at(i + 1) - ai;
        if (da.is_zero())
            return ai;
        if (!da)
            return da;
        Element bi = b.at(i);
        Element db = b.at(i + 1) - bi;
        if (db.is_zero())
            return Element::undefined(UndefinedReason::DivByZero);
        return ai - bi * (da / db);
    });
}

NumStream g0(Kind kind, int j, const NumStream& s, GConvention conv)
{
    check_order(0, j);
    return g0_from_remainder(delta(kind, s), j, conv);
}

NumStream g_alg(Kind kind, int k, int j, const NumStream& s, GConvention conv)
{
    check_order(k, j);
    EAlgTable table(kind, s, conv);
    return table.g(k, j);
}

NumStream e_alg(Kind kind, int k, const NumStream& s, GConvention conv)
{
    check_order(k, 1);
    EAlgTable table(kind, s, conv);
    return table.e(k);
}

NumStream aitken(const NumStream& s)
{
    NumStream ds = forward_difference(s);
    NumStream d2s = forward_difference(ds);
    return NumStream::generate(d2s.extent(), [s, ds, d2s](std::size_t i) {
        Element step = ds.at(i);
        if (step.is_zero())
            return s.at(i);
        return s.at(i) - (step * step) / d2s.at(i);
    });
}

NumStream formula_for_levin_two(Kind kind, const NumStream& s_prime, const NumStream& s)
{
    NumStream r = delta(kind, s);
    Extent ext = min(s_prime.extent(), r.extent()).shrink(2);
    return NumStream::generate(ext, [s_prime, r](std::size_t i) {
        const Element r0 = r.at(i), r1 = r.at(i + 1), r2 = r.at(i + 2);
        Element first = index_weight(i, 2) * s_prime.at(i + 2) * r1 * r0;
        Element second = index_weight(2 * i, 2) * s_prime.at(i + 1) * r2 * r0;
        Element third = index_weight(i) * s_prime.at(i) * r2 * r1;
        return first - second + third;
    });
}

NumStream levin(Kind kind, int k, const NumStream& s)
{
    switch (k) {
    case 0:
        return s;
    case 1: {
        NumStream ds = forward_difference(s);
        NumStream r = delta(kind, s);
        NumStream dr = forward_difference(r);
        return NumStream::generate(min(ds.extent(), dr.extent()), [s, ds, r, dr](std::size_t i) {
            Element step = ds.at(i);
            if (step.is_zero())
                return s.at(i);
            return s.at(i) - (step * r.at(i)) / dr.at(i);
        });
    }
    case 2: {
        NumStream num = formula_for_levin_two(kind, s, s);
        NumStream den = formula_for_levin_two(kind, repeat_const(1), s);
        return zip_with(div, num, den);
    }
    default:
        throw std::invalid_argument("Levin transform is available for orders 0, 1 and 2 only");
    }
}

NumStream apply(const TransformSpec& spec, const NumStream& s)
{
    spec.validate();
    if (spec.method == Method::Levin)
        return levin(spec.kind, spec.order, s);
    return e_alg(spec.kind, spec.order, s, spec.g_convention);
}

}  // namespace streamaccel

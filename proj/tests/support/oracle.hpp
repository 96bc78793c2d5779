// Test-only reference implementations. Everything here works on plain
// vectors of optional<mpq_class> with finite-list zip semantics and direct
// recursion, sharing no code with the stream machinery it checks.

#ifndef STREAMACCEL_TESTS_ORACLE_HPP
#define STREAMACCEL_TESTS_ORACLE_HPP

#include "streamaccel/stream.hpp"
#include "streamaccel/transforms.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Value = std::optional<mpq_class>;
using List = std::vector<Value>;

inline Value sub(const Value& a, const Value& b)
{
    if (!a || !b)
        return std::nullopt;
    return mpq_class(*a - *b);
}

inline Value mul(const Value& a, const Value& b)
{
    if (!a || !b)
        return std::nullopt;
    return mpq_class(*a * *b);
}

inline Value quot(const Value& a, const Value& b)
{
    if (!a || !b || *b == 0)
        return std::nullopt;
    return mpq_class(*a / *b);
}

inline List diff(const List& s)
{
    List out;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        out.push_back(sub(s[i + 1], s[i]));
    return out;
}

inline List remainder(streamaccel::Kind kind, const List& s)
{
    List d = diff(s);
    if (kind == streamaccel::Kind::T)
        return d;
    if (kind == streamaccel::Kind::U) {
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = mul(d[i], mpq_class(static_cast<long>(i) + 1));
        return d;
    }
    List d2 = diff(d);
    List out;
    for (std::size_t i = 0; i < d2.size(); ++i)
        out.push_back(quot(mul(d[i + 1], d[i]), d2[i]));
    return out;
}

// a_i - b_i * (da_i / db_i), returning a_i whenever da_i is exactly 0.
inline List step(const List& a, const List& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    List out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Value da = sub(a[i + 1], a[i]);
        if (da && *da == 0) {
            out.push_back(a[i]);
            continue;
        }
        out.push_back(sub(a[i], mul(b[i], quot(da, sub(b[i + 1], b[i])))));
    }
    return out;
}

inline List g(streamaccel::Kind kind, int k, int j, const List& s, streamaccel::GConvention conv)
{
    if (k == 0) {
        List r = remainder(kind, s);
        List out;
        for (std::size_t i = 0; i < r.size(); ++i) {
            mpq_class n_pow = 1;
            for (int p = 0; p < j - 1; ++p)
                n_pow *= static_cast<long>(i) + 1;
            out.push_back(conv == streamaccel::GConvention::TextFormula ? quot(r[i], n_pow) : quot(n_pow, r[i]));
        }
        return out;
    }
    return step(g(kind, k - 1, j, s, conv), g(kind, k - 1, k, s, conv));
}

inline List e(streamaccel::Kind kind, int k, const List& s, streamaccel::GConvention conv)
{
    if (k == 0)
        return s;
    return step(e(kind, k - 1, s, conv), g(kind, k - 1, k, s, conv));
}

// Displayed three-point weights, evaluated term by term.
inline List levin_two_weights(streamaccel::Kind kind, const List& sp, const List& s)
{
    List r = remainder(kind, s);
    List out;
    for (std::size_t i = 0; i + 2 < sp.size() && i + 2 < r.size(); ++i) {
        const auto n = static_cast<long>(i);
        Value a = mul(mul(mul(mpq_class(n + 2), sp[i + 2]), r[i + 1]), r[i]);
        Value b = mul(mul(mul(mpq_class(2 * (n + 1)), sp[i + 1]), r[i + 2]), r[i]);
        Value c = mul(mul(mul(mpq_class(n), sp[i]), r[i + 2]), r[i + 1]);
        Value ab = sub(a, b);
        out.push_back(ab && c ? Value(mpq_class(*ab + *c)) : std::nullopt);
    }
    return out;
}

inline List levin2(streamaccel::Kind kind, const List& s)
{
    List ones(s.size(), mpq_class(1));
    List num = levin_two_weights(kind, s, s);
    List den = levin_two_weights(kind, ones, s);
    List out;
    for (std::size_t i = 0; i < num.size(); ++i)
        out.push_back(quot(num[i], den[i]));
    return out;
}

inline List to_list(const streamaccel::NumStream& s)
{
    List out;
    for (const auto& e : s.to_vector())
        out.push_back(e ? Value(e.value().raw()) : std::nullopt);
    return out;
}

inline streamaccel::NumStream to_stream(const List& l)
{
    std::vector<streamaccel::Element> v;
    for (const auto& x : l)
        v.push_back(x ? streamaccel::Element(streamaccel::Scalar(*x))
                      : streamaccel::Element::undefined(streamaccel::UndefinedReason::OutOfRange));
    return streamaccel::NumStream::from_values(std::move(v));
}

/// Small random rational: numerator in [-9, 9], denominator in [1, 5].
inline mpq_class small_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline List random_list(std::mt19937_64& rng, std::size_t len)
{
    List out;
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(small_rational(rng));
    return out;
}

/// arctan(1/x) to within 10^-digits by its alternating Taylor series, exact rationals.
inline mpq_class arctan_inverse(long x, int digits)
{
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpq_class sum = 0;
    mpz_class power = x;  // x^(2k+1)
    const long x2 = x * x;
    for (long k = 0;; ++k) {
        mpq_class term(1, power * (2 * k + 1));
        term.canonicalize();
        sum += (k % 2 == 0) ? term : mpq_class(-term);
        if (term * bound < 1)
            break;
        power *= x2;
    }
    return sum;
}

/// pi/4 = 4 arctan(1/5) - arctan(1/239), accurate to better than 10^-(digits-1).
inline mpq_class pi_over_4(int digits = 60)
{
    return 4 * arctan_inverse(5, digits + 1) - arctan_inverse(239, digits + 1);
}

}  // namespace oracle

#endif  // STREAMACCEL_TESTS_ORACLE_HPP

#include "streamaccel/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace streamaccel {

Scalar::Scalar(long num, long den) : q_(num, den)
{
    if (den == 0)
        throw std::domain_error("Scalar: zero denominator");
    q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar checked_quotient(const Scalar& a, const Scalar& b) { return Scalar(mpq_class(a.q_ / b.q_)); }

Scalar abs(const Scalar& a) { return a.sign() < 0 ? -a : a; }

Scalar int_pow(const Scalar& a, unsigned long e)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), a.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), a.raw().get_den_mpz_t(), e);
    return Scalar(mpq_class(num, den));
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class pow10(unsigned long k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

// 10^k as a rational, any sign of k.
mpq_class pow10q(long k)
{
    if (k >= 0)
        return mpq_class(pow10(static_cast<unsigned long>(k)));
    return mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
}

mpz_class round_half_even(const mpq_class& x)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpq_class twice_frac = 2 * (x - mpq_class(q));
    int c = cmp(twice_frac, 1);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    return q;
}

}  // namespace

std::optional<Scalar> parse_scalar(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string_view whole = text, tail;
    char sep = 0;
    if (auto p = text.find_first_of("/."); p != std::string_view::npos) {
        sep = text[p];
        whole = text.substr(0, p);
        tail = text.substr(p + 1);
        if (!all_digits(tail))
            return std::nullopt;
    }
    if (!all_digits(whole))
        return std::nullopt;

    mpz_class num(std::string(whole), 10), den(1);
    if (sep == '/') {
        den = mpz_class(std::string(tail), 10);
        if (den == 0)
            return std::nullopt;
    } else if (sep == '.') {
        den = pow10(tail.size());
        num = num * den + mpz_class(std::string(tail), 10);
    }
    if (negative)
        num = -num;
    return Scalar(mpq_class(num, den));
}

std::string_view to_string(UndefinedReason r)
{
    switch (r) {
    case UndefinedReason::DivByZero: return "div-by-zero";
    case UndefinedReason::IndeterminateZeroOverZero: return "zero-over-zero";
    case UndefinedReason::OutOfRange: return "out-of-range";
    case UndefinedReason::PropagatedFromInput: return "propagated";
    }
    return "unknown";
}

namespace {

Element propagate(const Element& a, const Element& b)
{
    return Element::propagated(a.defined() ? b.why() : a.why());
}

}  // namespace

Element add(const Element& a, const Element& b)
{
    if (!a || !b)
        return propagate(a, b);
    return a.value() + b.value();
}

Element sub(const Element& a, const Element& b)
{
    if (!a || !b)
        return propagate(a, b);
    return a.value() - b.value();
}

Element mul(const Element& a, const Element& b)
{
    if (!a || !b)
        return propagate(a, b);
    return a.value() * b.value();
}

Element div(const Element& a, const Element& b)
{
    if (!a || !b)
        return propagate(a, b);
    if (b.value().is_zero())
        return Element::undefined(a.value().is_zero() ? UndefinedReason::IndeterminateZeroOverZero
                                                      : UndefinedReason::DivByZero);
    return checked_quotient(a.value(), b.value());
}

std::string to_string(const Element& a)
{
    if (a)
        return a.value().to_string();
    return render_decimal(a, 1);
}

SignificantDigits significant_digits(const Scalar& a, int sig_digits)
{
    if (sig_digits < 1)
        throw std::invalid_argument("significant_digits: sig_digits must be >= 1");
    const auto digits = static_cast<unsigned long>(sig_digits);
    if (a.is_zero())
        return {false, 0, std::string(digits, '0')};

    mpq_class x = abs(a).raw();

    // Decimal exponent e with 10^e <= x < 10^(e+1).
    long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
    while (x >= pow10q(e + 1))
        ++e;
    while (x < pow10q(e))
        --e;

    mpz_class m = round_half_even(x * pow10q(static_cast<long>(digits) - 1 - e));
    if (m == pow10(digits)) {
        m = pow10(digits - 1);
        ++e;
    }
    return {a.sign() < 0, e, m.get_str()};
}

std::string render_decimal(const Element& a, int sig_digits)
{
    if (sig_digits < 1)
        throw std::invalid_argument("render_decimal: sig_digits must be >= 1");
    if (!a) {
        const Undefined& u = a.why();
        std::string out = "undefined(";
        out += to_string(u.reason);
        if (u.reason != u.origin) {
            out += ':';
            out += to_string(u.origin);
        }
        return out + ")";
    }

    if (a.value().is_zero())
        return sig_digits == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(sig_digits) - 1, '0');

    const SignificantDigits sd = significant_digits(a.value(), sig_digits);
    const long e = sd.exponent;
    const std::string& ds = sd.digits;

    std::string out = sd.negative ? "-" : "";
    if (e >= -5 && e < sig_digits) {
        if (e >= 0) {
            const auto int_len = static_cast<std::size_t>(e) + 1;
            out += ds.substr(0, int_len);
            if (int_len < ds.size())
                out += "." + ds.substr(int_len);
        } else {
            out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
        }
    } else {
        out += ds.substr(0, 1);
        if (ds.size() > 1)
            out += "." + ds.substr(1);
        const long ae = e < 0 ? -e : e;
        out += e < 0 ? "e-" : "e+";
        if (ae < 10)
            out += '0';
        out += std::to_string(ae);
    }
    return out;
}

}  // namespace streamaccel

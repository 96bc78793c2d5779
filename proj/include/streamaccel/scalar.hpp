// Exact rational scalars and totalized (Undefined-carrying) elements.

#ifndef STREAMACCEL_SCALAR_HPP
#define STREAMACCEL_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace streamaccel {

/// Arbitrary-precision rational in canonical form (den > 0, gcd(|num|, den) = 1).
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class q);

    static Scalar from_integer(const mpz_class& z) { return Scalar(mpq_class(z)); }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    Scalar operator-() const { return Scalar(mpq_class(-q_)); }
    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }

    /// Exact quotient; the caller guarantees b != 0.
    friend Scalar checked_quotient(const Scalar& a, const Scalar& b);

private:
    mpq_class q_;
};

Scalar abs(const Scalar& a);

/// a^e for e >= 0; a^0 = 1 including 0^0.
Scalar int_pow(const Scalar& a, unsigned long e);

/// Parses "p", "p/q", or a plain decimal "d.ddd", each with an optional sign.
/// Returns nullopt on anything else, including a zero denominator.
std::optional<Scalar> parse_scalar(std::string_view text);

enum class UndefinedReason : std::uint8_t {
    DivByZero,
    IndeterminateZeroOverZero,
    OutOfRange,
    PropagatedFromInput,
};

std::string_view to_string(UndefinedReason r);

/// Marker for a cell with no value. `origin` is the first cause; it equals
/// `reason` unless the marker was propagated through arithmetic.
struct Undefined {
    UndefinedReason reason;
    UndefinedReason origin;

    friend bool operator==(const Undefined&, const Undefined&) = default;
};

class Element {
public:
    Element() : v_(Scalar()) {}
    Element(Scalar s) : v_(std::move(s)) {}
    Element(long v) : v_(Scalar(v)) {}

    static Element undefined(UndefinedReason r) { return Element(Undefined{r, r}); }
    static Element propagated(const Undefined& from)
    {
        return Element(Undefined{UndefinedReason::PropagatedFromInput, from.origin});
    }

    bool defined() const { return std::holds_alternative<Scalar>(v_); }
    explicit operator bool() const { return defined(); }

    const Scalar& value() const { return std::get<Scalar>(v_); }
    const Undefined& why() const { return std::get<Undefined>(v_); }

    bool is_zero() const { return defined() && value().is_zero(); }

    friend bool operator==(const Element&, const Element&) = default;

private:
    explicit Element(Undefined u) : v_(u) {}

    std::variant<Scalar, Undefined> v_;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element div(const Element& a, const Element& b);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
inline Element operator/(const Element& a, const Element& b) { return div(a, b); }

/// |a| ~= 0.d1d2...dk * 10^(exponent + 1), i.e. d1 sits at 10^exponent.
/// Zero has exponent 0 and all-zero digits.
struct SignificantDigits {
    bool negative = false;
    long exponent = 0;
    std::string digits;
};

/// Rounds |a| half to even to `sig_digits` significant digits.
SignificantDigits significant_digits(const Scalar& a, int sig_digits);

/// Decimal with exactly `sig_digits` significant digits, rounded half to even.
/// Fixed notation for decimal exponents in [-5, sig_digits), scientific
/// ("d.ddde+XX") outside it. Undefined renders as "undefined(<reason>)".
std::string render_decimal(const Element& a, int sig_digits);

/// Either "p/q" (or "p") or the undefined rendering.
std::string to_string(const Element& a);

}  // namespace streamaccel

#endif  // STREAMACCEL_SCALAR_HPP

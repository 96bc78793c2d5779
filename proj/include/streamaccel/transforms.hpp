// Sequence transformations: remainder estimates (kinds t/u/v), the
// E-algorithm of arbitrary order, Aitken's process, and Levin transforms of
// order 0, 1 and 2.

#ifndef STREAMACCEL_TRANSFORMS_HPP
#define STREAMACCEL_TRANSFORMS_HPP

#include "streamaccel/stream.hpp"

#include <string>
#include <string_view>

namespace streamaccel {

/// Remainder-estimate family used to build R from s.
enum class Kind { T, U, V };

/// Base case of the auxiliary g-sequences, with n = i + 1:
///  - TextFormula: g_{0,j}(n) = n^(1-j) * R_n
///  - CodeFormula: g_{0,j}(n) = n^(j-1) / R_n
/// Only TextFormula makes first-order E coincide with first-order Levin.
enum class GConvention { TextFormula, CodeFormula };

enum class Method { EAlg, Levin };

struct TransformSpec {
    Method method = Method::Levin;
    Kind kind = Kind::U;
    int order = 2;
    GConvention g_convention = GConvention::TextFormula;  // ignored by Levin

    /// Throws std::invalid_argument for negative orders or Levin order > 2.
    void validate() const;

    friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

std::string_view to_string(Kind k);
std::string_view to_string(Method m);
std::string_view to_string(GConvention g);
std::string to_string(const TransformSpec& spec);

/// Remainder estimate R:
///   T: R_i = ds_i
///   U: R_i = (i+1) ds_i
///   V: R_i = ds_{i+1} ds_i / d2s_i
/// Length L-1 for T and U, L-2 for V.
NumStream delta(Kind kind, const NumStream& s);

NumStream g0(Kind kind, int j, const NumStream& s, GConvention conv);
NumStream g_alg(Kind kind, int k, int j, const NumStream& s, GConvention conv);
NumStream e_alg(Kind kind, int k, const NumStream& s, GConvention conv);

/// One elimination step a_i - b_i * (da_i / db_i).
///
/// da_i = 0 yields a_i whatever db_i is; da_i != 0 with db_i = 0 yields
/// Undefined(DivByZero). Length is min(len a, len b) - 1.
NumStream eliminate(const NumStream& a, const NumStream& b);

/// s_i - (ds_i)^2 / d2s_i, returning s_i when ds_i = 0.
NumStream aitken(const NumStream& s);

/// Levin transform of order 0, 1 or 2.
NumStream levin(Kind kind, int k, const NumStream& s);

/// Three-point weighted combination behind order-2 Levin, with R = delta(kind, s):
///   (i+2) s'_{i+2} R_{i+1} R_i - 2(i+1) s'_{i+1} R_{i+2} R_i + i s'_i R_{i+2} R_{i+1}
NumStream formula_for_levin_two(Kind kind, const NumStream& s_prime, const NumStream& s);

/// Applies the transform described by `spec`.
NumStream apply(const TransformSpec& spec, const NumStream& s);

}  // namespace streamaccel

#endif  // STREAMACCEL_TRANSFORMS_HPP

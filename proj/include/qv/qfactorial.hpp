#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "qv/series.hpp"

namespace qv {

// Monomial parameter value c*q^k. Every specialized parameter in the
// engine takes this form; the canonical zero has k = 0.
struct ParamValue {
    Rational c;
    std::int64_t k = 0;

    bool is_zero() const { return c == 0; }
    ParamValue operator*(const ParamValue& rhs) const { return {c * rhs.c, k + rhs.k}; }
    ParamValue operator/(const ParamValue& rhs) const;
    ParamValue operator-() const { return {-c, k}; }
    // Integer power, n may be negative when c != 0.
    ParamValue pow(std::int64_t n) const;
    QSeries series(std::int64_t order) const { return QSeries::monomial(c, k, order); }
    bool operator==(const ParamValue& rhs) const { return c == rhs.c && k == rhs.k; }
};

inline ParamValue param(long num, long den = 1, std::int64_t k = 0) {
    ParamValue p{rat(num, den), k};
    if (p.c == 0) p.k = 0;
    return p;
}
inline ParamValue qpow(std::int64_t k) { return {1, k}; }

// Grammar: `0`, `R`, `q`, `-q`, `q^K`, `R*q^K` with R like `-3/2`, K an integer.
std::optional<ParamValue> parse_param(const std::string& text);
std::string to_string(const ParamValue& p);

// The series base q^m of an identity ("replace q by q^m").
struct BaseExp {
    int m = 1;
};

// (a; q^m)_n = prod_{i=0}^{n-1} (1 - a q^{m i}), truncated to order.
QSeries poch_finite(const ParamValue& a, std::int64_t n, BaseExp base, std::int64_t order);

// (a; q^m)_inf; factor i enters iff a.k + m*i < order, the remaining
// factors are 1 + O(q^order).
QSeries poch_infinite(const ParamValue& a, BaseExp base, std::int64_t order);

// (a; q^m)_{-n} = (-a)^{-n} q^{m n(n+1)/2} / (q^m/a; q^m)_n, n >= 1.
QSeries poch_negative(const ParamValue& a, std::int64_t n, BaseExp base, std::int64_t order);

// (a1,...,ar; q^m)_n; n < 0 uses poch_negative, n = infinite via the overload below.
QSeries poch_multi(std::span<const ParamValue> params, std::int64_t n, BaseExp base,
                   std::int64_t order);
QSeries poch_multi_infinite(std::span<const ParamValue> params, BaseExp base, std::int64_t order);

// (q^t/a; q^m)_n * a^n = prod_{i=0}^{n-1} (a - q^{t+m i}), the polynomial
// form of the combination that appears throughout the Hecke-type sums;
// remains well defined at a = 0.
QSeries poch_shifted_pow(const ParamValue& a, std::int64_t t, std::int64_t n, BaseExp base,
                         std::int64_t order);

}  // namespace qv

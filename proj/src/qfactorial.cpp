#include "qv/qfactorial.hpp"

#include <sstream>

namespace qv {

ParamValue ParamValue::operator/(const ParamValue& rhs) const {
    if (rhs.c == 0)
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "division by the zero parameter");
    return {c / rhs.c, k - rhs.k};
}

ParamValue ParamValue::pow(std::int64_t n) const {
    if (n == 0) return {1, 0};
    if (c == 0) return {0, 0};
    Rational r = 1;
    Rational base = n > 0 ? c : Rational(1) / c;
    for (std::int64_t i = 0; i < (n > 0 ? n : -n); ++i) r *= base;
    return {r, k * n};
}

std::optional<ParamValue> parse_param(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::string s = text;
    Rational sign = 1;
    if (s[0] == '-' && s.size() > 1 && (s[1] == 'q')) {
        sign = -1;
        s = s.substr(1);
    }
    auto qpos = s.find('q');
    if (qpos == std::string::npos) {
        auto r = parse_rational(s);
        if (!r) return std::nullopt;
        ParamValue p{*r, 0};
        return p;
    }
    Rational coef = sign;
    if (qpos > 0) {
        if (s[qpos - 1] != '*') return std::nullopt;
        auto r = parse_rational(s.substr(0, qpos - 1));
        if (!r) return std::nullopt;
        coef *= *r;
    }
    std::int64_t k = 1;
    if (qpos + 1 < s.size()) {
        if (s[qpos + 1] != '^') return std::nullopt;
        const std::string exp = s.substr(qpos + 2);
        if (exp.empty()) return std::nullopt;
        std::size_t i = exp[0] == '-' ? 1 : 0;
        if (i == exp.size()) return std::nullopt;
        for (; i < exp.size(); ++i)
            if (exp[i] < '0' || exp[i] > '9') return std::nullopt;
        k = std::stoll(exp);
    }
    if (coef == 0) return ParamValue{0, 0};
    return ParamValue{coef, k};
}

std::string to_string(const ParamValue& p) {
    if (p.c == 0) return "0";
    std::ostringstream out;
    if (p.k == 0) return p.c.get_str();
    if (p.c == -1) out << "-";
    else if (p.c != 1) out << p.c.get_str() << "*";
    out << "q";
    if (p.k != 1) out << "^" << p.k;
    return out.str();
}

QSeries poch_finite(const ParamValue& a, std::int64_t n, BaseExp base, std::int64_t order) {
    QSeries result = QSeries::one(order);
    if (a.is_zero()) return result;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t e = a.k + base.m * i;
        // (1 - a q^{m i}); a factor entirely beyond the window is 1 + O(q^order).
        if (e >= order) continue;
        result = result - result.scaled(a.c).shifted(e);
    }
    return result;
}

QSeries poch_infinite(const ParamValue& a, BaseExp base, std::int64_t order) {
    QSeries result = QSeries::one(order);
    if (a.is_zero()) return result;
    for (std::int64_t i = 0; a.k + base.m * i < order; ++i)
        result = result - result.scaled(a.c).shifted(a.k + base.m * i);
    return result;
}

QSeries poch_negative(const ParamValue& a, std::int64_t n, BaseExp base, std::int64_t order) {
    if (a.is_zero())
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "(0; q)_{-n} is undefined");
    const std::int64_t shift = base.m * n * (n + 1) / 2;
    const ParamValue qma = ParamValue{1, base.m} / a;
    // Evaluate the denominator deep enough that the final truncation is sound.
    QSeries den = poch_finite(qma, n, base, order + std::max<std::int64_t>(0, -qma.k * n) + shift);
    if (den.is_zero())
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "(a; q)_{-n} hits a vanishing factor");
    const ParamValue lead = (-a).pow(-n);
    return den.inverse().scaled(lead.c).shifted(lead.k + shift).truncated(order);
}

QSeries poch_multi(std::span<const ParamValue> params, std::int64_t n, BaseExp base,
                   std::int64_t order) {
    QSeries result = QSeries::one(order);
    for (const auto& p : params)
        result = result * (n >= 0 ? poch_finite(p, n, base, order) : poch_negative(p, -n, base, order));
    return result;
}

QSeries poch_multi_infinite(std::span<const ParamValue> params, BaseExp base, std::int64_t order) {
    QSeries result = QSeries::one(order);
    for (const auto& p : params) result = result * poch_infinite(p, base, order);
    return result;
}

QSeries poch_shifted_pow(const ParamValue& a, std::int64_t t, std::int64_t n, BaseExp base,
                         std::int64_t order) {
    QSeries result = QSeries::one(order);
    const QSeries av = a.is_zero() ? QSeries::zero(order) : a.series(order);
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t e = t + base.m * i;
        QSeries factor = e < order ? av - QSeries::monomial(1, e, order) : av;
        if (factor.is_zero())
            return QSeries::zero(order);
        result = result * factor;
    }
    return result;
}

}  // namespace qv

#include "qv/hyper.hpp"

#include <algorithm>

namespace qv {

QSeries sum_guarded(const std::function<QSeries(std::int64_t)>& term, std::int64_t order,
                    const SumGuard& guard) {
    QSeries acc = QSeries::zero(order);
    const std::int64_t cap = guard.cap_for(order);
    int quiet = 0;
    for (std::int64_t n = 0;; ++n) {
        if (n > cap)
            throw SeriesError(SeriesErrorKind::GuardCapExceeded,
                              "sum consumed " + std::to_string(cap) +
                                  " terms without stabilizing; specialization looks inadmissible");
        QSeries t = term(n);
        if (t.is_zero() || t.valuation() >= order) {
            if (++quiet >= guard.lookahead) return acc.truncated(order);
        } else {
            quiet = 0;
        }
        if (!t.is_zero() && t.valuation() < order) acc = acc + t.truncated(order);
    }
}

namespace {

// Lower bound for the q-valuation contributed by (a; q^m)_n factors.
std::int64_t poch_val_floor(const ParamValue& a, std::int64_t n, int m) {
    if (a.is_zero() || a.k >= 0) return 0;
    std::int64_t v = 0;
    for (std::int64_t i = 0; i < n && a.k + m * i < 0; ++i) v += a.k + m * i;
    return v;
}

}  // namespace

QSeries phi_eval(const HyperSpec& spec, std::int64_t order, const SumGuard& guard) {
    const int m = spec.base.m;
    const int e = 1 + static_cast<int>(spec.den_params.size()) - static_cast<int>(spec.num_params.size());

    // Terminating index, when some numerator parameter is exactly q^{-m n0}.
    std::int64_t n_top = -1;
    for (const auto& a : spec.num_params) {
        if (a.c == 1 && a.k <= 0 && (-a.k) % m == 0) {
            const std::int64_t cand = -a.k / m;
            n_top = n_top < 0 ? cand : std::min(n_top, cand);
        }
    }
    if (n_top < 0) {
        const bool grows = e >= 1 || (spec.z.is_zero());
        bool z_admissible = spec.z.k >= 1;
        for (const auto& a : spec.num_params)
            if (a.k < 0) z_admissible = false;
        if (!grows && !z_admissible)
            throw SeriesError(SeriesErrorKind::InadmissibleSubstitution,
                              "series neither terminates nor gains valuation");
    }

    auto term = [&](std::int64_t n) {
        // Exponent carried by z^n and the balancing q-power.
        const std::int64_t shift = spec.z.k * n + static_cast<std::int64_t>(e) * m * n * (n - 1) / 2;
        std::int64_t depth = 0;
        for (const auto& a : spec.num_params) depth += poch_val_floor(a, n, m);
        const std::int64_t work = order - std::min<std::int64_t>(0, shift + depth) + 1;
        QSeries num = QSeries::one(work);
        for (const auto& a : spec.num_params) num = num * poch_finite(a, n, {m}, work);
        if (num.is_zero()) return QSeries::zero(order);
        QSeries den = poch_finite(ParamValue{1, m}, n, {m}, work);
        for (const auto& b : spec.den_params) den = den * poch_finite(b, n, {m}, work);
        if (den.is_zero())
            throw SeriesError(SeriesErrorKind::NonUnitInverse,
                              "denominator shifted factorial vanishes at index " + std::to_string(n));
        QSeries t = num * den.inverse();
        Rational zc = spec.z.c;
        Rational coef = 1;
        for (std::int64_t i = 0; i < n; ++i) coef *= zc;
        if (e != 0 && n % 2 != 0 && e % 2 != 0) coef = -coef;
        return t.scaled(coef).shifted(shift).truncated(order);
    };

    if (n_top >= 0) {
        QSeries acc = QSeries::zero(order);
        for (std::int64_t n = 0; n <= n_top; ++n) acc = acc + term(n);
        return acc;
    }
    if (spec.z.is_zero()) return QSeries::one(order);
    return sum_guarded(term, order, guard);
}

std::int64_t QuadExponent::eval(std::int64_t n, std::int64_t j) const {
    Rational v = n2 * Rational(n) * Rational(n) + n1 * Rational(n) + j2 * Rational(j) * Rational(j) +
                 j1 * Rational(j) + c;
    if (v.get_den() != 1)
        throw SeriesError(SeriesErrorKind::InadmissibleSubstitution,
                          "inner exponent is not integral at (n, j) = (" + std::to_string(n) + ", " +
                              std::to_string(j) + ")");
    if (!v.get_num().fits_slong_p())
        throw SeriesError(SeriesErrorKind::InadmissibleSubstitution, "inner exponent overflow");
    return v.get_num().get_si();
}

namespace hecke_sign {
int plus(std::int64_t, std::int64_t) { return 1; }
int alt_j(std::int64_t, std::int64_t j) { return j % 2 == 0 ? 1 : -1; }
int alt_nj(std::int64_t n, std::int64_t j) { return (n + j) % 2 == 0 ? 1 : -1; }
}  // namespace hecke_sign

QSeries hecke_sum(const HeckeSumSpec& spec, std::int64_t order, const SumGuard& guard) {
    auto term = [&](std::int64_t n) {
        const std::int64_t j_lo = spec.inner_range == InnerRange::Symmetric ? -n : 0;
        const std::int64_t j_hi = spec.inner_range == InnerRange::Symmetric ? n : 2 * n;
        std::int64_t min_q = 0;
        bool any = false;
        for (std::int64_t j = j_lo; j <= j_hi; ++j) {
            const std::int64_t qe = spec.inner_exponent.eval(n, j);
            if (!any || qe < min_q) min_q = qe;
            any = true;
        }
        const QSeries weight = spec.outer_weight(n, order - std::min<std::int64_t>(0, min_q));
        QSeries acc = QSeries::zero(order);
        for (std::int64_t j = j_lo; j <= j_hi; ++j) {
            const std::int64_t qe = spec.inner_exponent.eval(n, j);
            if (weight.is_zero() || weight.valuation() + qe >= order) continue;
            const int s = spec.inner_sign(n, j);
            acc = acc + weight.scaled(s).shifted(qe).truncated(order);
        }
        return acc;
    };
    return sum_guarded(term, order, guard);
}

QSeries finite_theta_S(std::int64_t n, std::int64_t order) {
    if (order <= 0)
        throw SeriesError(SeriesErrorKind::NegativeOrder, "finite theta needs a positive order");
    QSeries acc = QSeries::zero(order);
    for (std::int64_t j = -n; j <= n; ++j)
        acc = acc + QSeries::monomial(j % 2 == 0 ? 1 : -1, -j * j, order);
    return acc;
}

}  // namespace qv

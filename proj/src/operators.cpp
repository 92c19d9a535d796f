#include "qv/operators.hpp"

#include <vector>

namespace qv {

namespace {

struct ParamLess {
    bool operator()(const ParamValue& lhs, const ParamValue& rhs) const {
        if (lhs.k != rhs.k) return lhs.k < rhs.k;
        return lhs.c < rhs.c;
    }
};

// One Jackson evaluation sees the points q^k x0 for 0 <= k <= n; the same
// points recur across derivative orders, so cache per (function, call).
class PointCache {
  public:
    PointCache(const PointFunction& f, std::int64_t order) : f_(f), order_(order) {}
    const QSeries& at(const ParamValue& p) {
        auto it = cache_.find(p);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(p, f_.eval(p, order_)).first->second;
    }

  private:
    const PointFunction& f_;
    std::int64_t order_;
    std::map<ParamValue, QSeries, ParamLess> cache_;
};

QSeries jackson_with_cache(PointCache& cache, const ParamValue& x0, std::int64_t n,
                           std::int64_t order, std::int64_t work) {
    if (x0.is_zero())
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "q-derivative needs a nonzero point");
    QSeries acc = QSeries::zero(work);
    for (std::int64_t k = 0; k <= n; ++k) {
        // (q^{-n};q)_k q^k / (q;q)_k is an exact Laurent polynomial.
        QSeries coef = poch_finite(ParamValue{1, -n}, k, {1}, work)
                           .shifted(k) *
                       poch_finite(ParamValue{1, 1}, k, {1}, work).inverse();
        acc = acc + coef * cache.at(ParamValue{x0.c, x0.k + k});
    }
    const ParamValue lead = x0.pow(-n);
    return acc.scaled(lead.c).shifted(lead.k).truncated(order);
}

}  // namespace

QSeries q_derivative(const PointFunction& f, const ParamValue& x0, std::int64_t order) {
    if (x0.is_zero())
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "q-derivative needs a nonzero point");
    const std::int64_t work = order + std::max<std::int64_t>(0, x0.k);
    QSeries diff = f.eval(x0, work) - f.eval(ParamValue{x0.c, x0.k + 1}, work);
    return diff.scaled(1 / x0.c).shifted(-x0.k).truncated(order);
}

QSeries jackson_dn(const PointFunction& f, const ParamValue& x0, std::int64_t n,
                   std::int64_t order) {
    // Offsets: x0^{-n} costs n*x0.k, the (q^{-n};q)_k coefficients reach
    // valuation -n(n+1)/2 before the q^k correction.
    const std::int64_t work =
        order + std::max<std::int64_t>(0, n * x0.k) + n * (n + 1) / 2 + 1;
    PointCache cache(f, work);
    return jackson_with_cache(cache, x0, n, order, work);
}

QSeries expansion_f_alpha_a(const PointFunction& f, const ParamValue& alpha, const ParamValue& a,
                            std::int64_t order, const SumGuard& guard) {
    if (alpha.c == 1 && alpha.k == 0)
        throw SeriesError(SeriesErrorKind::InadmissibleSubstitution,
                          "the expansion needs alpha != 1");
    PointCache cache(f, order);
    auto term = [&](std::int64_t n) {
        QSeries weight = QSeries::one(order) - alpha.series(order).shifted(2 * n);
        weight = weight * poch_finite(alpha, n, {1}, order);
        QSeries den = (QSeries::one(order) - alpha.series(order)) *
                      poch_finite(ParamValue{1, 1}, n, {1}, order) *
                      poch_finite(alpha * a, n, {1}, order);
        QSeries outer = weight * poch_shifted_pow(a, 1, n, {1}, order).shifted(-n) * den.inverse();
        if (outer.is_zero()) return QSeries::zero(order);
        const std::int64_t inner_work = order - std::min<std::int64_t>(0, outer.valuation());
        QSeries inner = QSeries::zero(inner_work);
        for (std::int64_t k = 0; k <= n; ++k) {
            QSeries coef = poch_finite(ParamValue{1, -n}, k, {1}, inner_work) *
                           poch_finite(ParamValue{alpha.c, alpha.k + n}, k, {1}, inner_work);
            coef = coef.shifted(k);
            QSeries cden = poch_finite(ParamValue{1, 1}, k, {1}, inner_work) *
                           poch_finite(ParamValue{alpha.c, alpha.k + 1}, k, {1}, inner_work);
            inner = inner + coef * cden.inverse() * cache.at(ParamValue{alpha.c, alpha.k + k + 1});
        }
        return (outer * inner).truncated(order);
    };
    return sum_guarded(term, order, guard);
}

std::optional<QSeries::Mismatch> verify_operator_identity(
    const ParamValue& a, const ParamValue& b, const ParamValue& s, const ParamValue& t,
    const ParamValue& u, const ParamValue& v, std::int64_t order, const SumGuard& guard) {
    PointFunction f{
        [&](const ParamValue& x, std::int64_t w) {
            QSeries num = poch_infinite(x * v, {1}, w);
            QSeries den = poch_infinite(x * s, {1}, w) * poch_infinite(x * t, {1}, w) *
                          poch_infinite(x * u, {1}, w);
            return num * den.inverse();
        },
        "(av;q)inf/(as,at,au;q)inf in the a slot"};

    auto lhs_term = [&](std::int64_t n) {
        const std::int64_t jwork = order + std::max<std::int64_t>(0, n * a.k) + n * (n + 1) / 2 + 1;
        PointCache local(f, jwork);
        QSeries dn = jackson_with_cache(local, a, n, order + std::max<std::int64_t>(0, -n * b.k), jwork);
        QSeries coef = poch_finite(ParamValue{1, 1}, n, {1}, order).inverse();
        const ParamValue bn = b.pow(n);
        if (bn.is_zero()) return n == 0 ? dn : QSeries::zero(order);
        return (dn.scaled(bn.c).shifted(bn.k) * coef).truncated(order);
    };
    QSeries lhs = sum_guarded(lhs_term, order, guard);

    if (v.is_zero())
        throw SeriesError(SeriesErrorKind::InadmissibleSubstitution,
                          "the product side needs v != 0");
    // A zero slot removes its factors and sends the series argument to 0,
    // collapsing the 3phi2 to its n = 0 term.
    const bool stu_zero = s.is_zero() || t.is_zero() || u.is_zero();
    const ParamValue abstu_v = stu_zero ? ParamValue{0, 0} : a * b * s * t * u / v;
    QSeries num = poch_infinite(a * v, {1}, order) * poch_infinite(b * v, {1}, order) *
                  poch_infinite(abstu_v, {1}, order);
    QSeries den = QSeries::one(order);
    for (const ParamValue& p : {a * s, a * t, a * u, b * s, b * t, b * u})
        den = den * poch_infinite(p, {1}, order);
    QSeries phi_part = QSeries::one(order);
    if (!stu_zero) {
        HyperSpec spec{{v / s, v / t, v / u}, {a * v, b * v}, {1}, abstu_v};
        phi_part = phi_eval(spec, order, guard);
    }
    QSeries rhs = num * den.inverse() * phi_part;
    return QSeries::first_mismatch(lhs, rhs, order);
}

}  // namespace qv

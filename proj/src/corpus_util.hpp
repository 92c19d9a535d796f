#pragma once

// Builder combinators shared by the per-section registry files. The
// record builders compose these over monomial parameters; everything is
// sound at the order it is asked for.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qv/corpus.hpp"
#include "qv/operators.hpp"

namespace qv::corpus_detail {

inline ParamValue at(const Assignment& assignment, const std::string& name) {
    auto it = assignment.find(name);
    if (it == assignment.end())
        throw SeriesError(SeriesErrorKind::InadmissibleSubstitution,
                          "missing slot '" + name + "'");
    return it->second;
}

inline std::int64_t int_slot(const Assignment& assignment, const std::string& name) {
    const ParamValue p = at(assignment, name);
    if (p.k != 0 || p.c.get_den() != 1)
        throw SeriesError(SeriesErrorKind::InadmissibleSubstitution,
                          "slot '" + name + "' must be a nonnegative integer");
    return p.c.get_num().get_si();
}

// prod (a; q^m)_n over nums divided by the same over dens.
inline QSeries poch_ratio(std::initializer_list<ParamValue> nums,
                          std::initializer_list<ParamValue> dens, std::int64_t n, BaseExp base,
                          std::int64_t order) {
    QSeries num = QSeries::one(order);
    for (const auto& a : nums) num = num * poch_finite(a, n, base, order);
    QSeries den = QSeries::one(order);
    for (const auto& b : dens) den = den * poch_finite(b, n, base, order);
    if (den.is_zero())
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "vanishing shifted-factorial ratio");
    return num * den.inverse();
}

inline QSeries infprod(std::initializer_list<ParamValue> nums,
                       std::initializer_list<ParamValue> dens, BaseExp base, std::int64_t order) {
    QSeries num = QSeries::one(order);
    for (const auto& a : nums) num = num * poch_infinite(a, base, order);
    QSeries den = QSeries::one(order);
    for (const auto& b : dens) den = den * poch_infinite(b, base, order);
    if (den.is_zero() || den.valuation() != 0)
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "vanishing infinite product");
    return num * den.inverse();
}

// The very-well-poised weight (1 - alpha q^{2mn})(alpha; q^m)_n
// / ((1 - alpha)(q^m; q^m)_n).
inline QSeries vwp_weight(const ParamValue& alpha, std::int64_t n, BaseExp base,
                          std::int64_t order) {
    QSeries num = QSeries::one(order) - alpha.series(order).shifted(2 * base.m * n);
    num = num * poch_finite(alpha, n, base, order);
    QSeries den = (QSeries::one(order) - alpha.series(order)) *
                  poch_finite(ParamValue{1, base.m}, n, base, order);
    return num * den.inverse();
}

// q^{m n(n+1)/2}-free helper for 1 /(1 - c q^k) factors.
inline QSeries inv1m(const ParamValue& p, std::int64_t order) {
    QSeries den = QSeries::one(order) - p.series(order);
    if (den.is_zero())
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "vanishing linear factor");
    return den.inverse();
}

inline QSeries one_minus(std::int64_t e, std::int64_t order) {
    return QSeries::one(order) - QSeries::monomial(1, e, order);
}
inline QSeries one_plus(std::int64_t e, std::int64_t order) {
    return QSeries::one(order) + QSeries::monomial(1, e, order);
}

inline Rational sign_pow(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

// Product of two lazily evaluated factors, sound at `order` even when
// either factor has negative valuation: each side is (re)evaluated deep
// enough to cover the other's Laurent depth.
inline QSeries mul_sound(const std::function<QSeries(std::int64_t)>& fa,
                         const std::function<QSeries(std::int64_t)>& fb, std::int64_t order) {
    QSeries a = fa(order);
    if (a.is_zero()) return QSeries::zero(order);
    QSeries b = fb(order - std::min<std::int64_t>(0, a.valuation()));
    if (b.is_zero()) return QSeries::zero(order);
    if (b.valuation() < 0) a = fa(order - b.valuation());
    return (a * b).truncated(order);
}

// Evaluates a builder sound at `order`. Laurent intermediates make the
// tracked truncation order of a naive evaluation fall short by a deficit
// that is independent of the working order (every primitive maps working
// order affinely with slope one), so a single re-evaluation at
// order + deficit restores exactly what was lost.
inline QSeries eval_sound(const std::function<QSeries(std::int64_t)>& f, std::int64_t order) {
    QSeries s = f(order);
    if (s.order() < order) s = f(2 * order - s.order());
    if (s.order() < order)
        throw SeriesError(SeriesErrorKind::NegativeOrder,
                          "builder cannot reach the requested order");
    return s.truncated(order);
}

// sum_{n>=0} q^{m n(n+1)/2} to order.
inline QSeries theta_tri(int m, std::int64_t order) {
    QSeries acc = QSeries::zero(order);
    for (std::int64_t n = 0; m * n * (n + 1) / 2 < order; ++n)
        acc = acc + QSeries::monomial(1, m * n * (n + 1) / 2, order);
    return acc;
}

// sum_{n in Z} (-1)^n q^{n^2} to order.
inline QSeries theta_sq(std::int64_t order) {
    QSeries acc = QSeries::one(order);
    for (std::int64_t n = 1; n * n < order; ++n)
        acc = acc + QSeries::monomial(n % 2 == 0 ? 2 : -2, n * n, order);
    return acc;
}

// Convenience quadratic exponents.
inline QuadExponent quad(Rational n2, Rational n1, Rational j2, Rational j1, Rational c = 0) {
    return QuadExponent{n2, n1, j2, j1, c};
}

// Slot predicates.
inline SlotSpec any_slot(const std::string& name) { return SlotSpec{name}; }
// Admits c*q^k with k >= min_k (and optionally zero).
SlotSpec valuation_slot(const std::string& name, std::int64_t min_k, bool allow_zero = true);
// Excludes values of the form q^j, j >= low (pole positions of (q^t/x; q)-type denominators).
SlotSpec nonpole_slot(const std::string& name, std::int64_t min_k, std::int64_t pole_low,
                      bool allow_zero = true);
inline SlotSpec index_slot(const std::string& name, std::int64_t lo, std::int64_t hi) {
    return SlotSpec{name, [lo, hi](const ParamValue& p) {
                        return p.k == 0 && p.c.get_den() == 1 && p.c >= lo && p.c <= hi;
                    }};
}

inline Assignment assign(std::initializer_list<std::pair<std::string, ParamValue>> entries) {
    Assignment a;
    for (const auto& [k, v] : entries) a.emplace(k, v);
    return a;
}

// Guarded single sum whose per-n term builder is made sound automatically.
inline QSeries sum1(const std::function<QSeries(std::int64_t, std::int64_t)>& term,
                    std::int64_t order, const SumGuard& guard) {
    return sum_guarded(
        [&term, order](std::int64_t n) {
            return eval_sound([&term, n](std::int64_t w) { return term(n, w); }, order);
        },
        order, guard);
}

// Hecke-type double sum from a weight builder plus range/exponent/sign.
inline QSeries hecke1(const std::function<QSeries(std::int64_t, std::int64_t)>& weight,
                      InnerRange range, const QuadExponent& exponent,
                      const std::function<int(std::int64_t, std::int64_t)>& sign,
                      std::int64_t order, const SumGuard& guard) {
    HeckeSumSpec spec;
    spec.outer_weight = [weight](std::int64_t n, std::int64_t w) {
        return eval_sound([&weight, n](std::int64_t v) { return weight(n, v); }, w);
    };
    spec.inner_range = range;
    spec.inner_exponent = exponent;
    spec.inner_sign = sign;
    return hecke_sum(spec, order, guard);
}

void register_s1(std::vector<IdentityRecord>& out);
void register_s2(std::vector<IdentityRecord>& out);
void register_s3(std::vector<IdentityRecord>& out);
void register_s4(std::vector<IdentityRecord>& out);
void register_s5(std::vector<IdentityRecord>& out);
void register_s6(std::vector<IdentityRecord>& out);
void register_s7(std::vector<IdentityRecord>& out);
void register_s8(std::vector<IdentityRecord>& out);

}  // namespace qv::corpus_detail

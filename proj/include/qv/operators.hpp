#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "qv/hyper.hpp"

namespace qv {

// A function known through evaluation at monomial points only. eval must
// be pure: the same point always yields coefficientwise-equal series.
struct PointFunction {
    std::function<QSeries(const ParamValue&, std::int64_t /*order*/)> eval;
    std::string description;
};

// D_q f at x0: (f(x0) - f(q x0)) / x0, exact Laurent division by the monomial.
QSeries q_derivative(const PointFunction& f, const ParamValue& x0, std::int64_t order);

// Jackson's formula for D_q^n f at x0:
//   x0^{-n} sum_{k=0}^n ((q^{-n};q)_k/(q;q)_k) q^k f(q^k x0).
// Values f(q^k x0) are memoized across k within one evaluation.
QSeries jackson_dn(const PointFunction& f, const ParamValue& x0, std::int64_t n,
                   std::int64_t order);

// The double-series expansion of f(alpha a) in terms of f(alpha q^{k+1}):
//   sum_n (1-alpha q^{2n}) (alpha, q/a;q)_n (a/q)^n / ((1-alpha)(q, alpha a;q)_n)
//     * sum_{k=0}^n ((q^{-n}, alpha q^n;q)_k q^k/((q, q alpha;q)_k)) f(alpha q^{k+1}).
QSeries expansion_f_alpha_a(const PointFunction& f, const ParamValue& alpha, const ParamValue& a,
                            std::int64_t order, const SumGuard& guard);

// Checks the q-exponential operator identity
//   T(b d_{q,a}) { (av;q)inf / (as, at, au;q)inf }
//     = ((av, bv, abstu/v;q)inf / (as,...,bu;q)inf) 3phi2(v/s, v/t, v/u; av, bv; q, abstu/v),
// expanding the left side through Jackson's formula on the a slot.
std::optional<QSeries::Mismatch> verify_operator_identity(
    const ParamValue& a, const ParamValue& b, const ParamValue& s, const ParamValue& t,
    const ParamValue& u, const ParamValue& v, std::int64_t order, const SumGuard& guard);

}  // namespace qv

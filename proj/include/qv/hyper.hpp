#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qv/qfactorial.hpp"
#include "qv/series.hpp"

namespace qv {

// Termination discipline for non-terminating sums. A sum is accepted once
// `lookahead` consecutive terms have valuation >= the truncation order;
// `cap` turns a non-stabilizing (inadmissible) sum into a loud error.
struct SumGuard {
    int lookahead = 8;
    std::int64_t cap = 0;  // 0: derive as 10*order + 100 at the call site

    std::int64_t cap_for(std::int64_t order) const { return cap > 0 ? cap : 10 * order + 100; }
};

// Accumulates term(0) + term(1) + ... under the guard. Each term must be
// sound at `order`; the result is truncated to `order`.
QSeries sum_guarded(const std::function<QSeries(std::int64_t)>& term, std::int64_t order,
                    const SumGuard& guard);

// A basic hypergeometric series r_phi_s with monomial parameters in base q^m.
struct HyperSpec {
    std::vector<ParamValue> num_params;
    std::vector<ParamValue> den_params;
    BaseExp base;
    ParamValue z;
};

// Evaluates the sum of prod(a_i;q^m)_n / ((q^m;q^m)_n prod(b_j;q^m)_n)
// * ((-1)^n q^{m n(n-1)/2})^{1+s-r} z^n, truncated to order.
//
// Admissible specs: terminating (some numerator parameter is exactly
// q^{-m n0}), or 1+s-r >= 1, or z gains valuation with all numerator
// exponents nonnegative. Everything else raises InadmissibleSubstitution.
QSeries phi_eval(const HyperSpec& spec, std::int64_t order, const SumGuard& guard);

// Quadratic exponent Q(n, j) = n2*n^2 + n1*n + j2*j^2 + j1*j + c with
// rational coefficients, integer-valued on the inner range.
struct QuadExponent {
    Rational n2, n1, j2, j1, c;
    std::int64_t eval(std::int64_t n, std::int64_t j) const;
};

enum class InnerRange { Symmetric, Forward };  // j in [-n, n] or j in [0, 2n]

namespace hecke_sign {
int plus(std::int64_t n, std::int64_t j);
int alt_j(std::int64_t n, std::int64_t j);
int alt_nj(std::int64_t n, std::int64_t j);
}  // namespace hecke_sign

// A Rogers--Hecke type double sum: for each n the exact inner Laurent
// polynomial sum_j sign(n,j) q^{Q(n,j)} is multiplied by outer_weight(n)
// and the products are accumulated under the guard.
struct HeckeSumSpec {
    // Weight evaluated sound at the order it is asked for.
    std::function<QSeries(std::int64_t, std::int64_t /*order*/)> outer_weight;
    InnerRange inner_range = InnerRange::Symmetric;
    QuadExponent inner_exponent;
    std::function<int(std::int64_t, std::int64_t)> inner_sign = hecke_sign::plus;
};

QSeries hecke_sum(const HeckeSumSpec& spec, std::int64_t order, const SumGuard& guard);

// S_n(q) = sum_{j=-n}^{n} (-1)^j q^{-j^2}, an exact Laurent polynomial.
QSeries finite_theta_S(std::int64_t n, std::int64_t order);

}  // namespace qv

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qv/rational.hpp"

namespace qv {

enum class SeriesErrorKind {
    NonUnitInverse,
    NegativeOrder,
    InadmissibleSubstitution,
    GuardCapExceeded,
};

class SeriesError : public std::runtime_error {
  public:
    SeriesError(SeriesErrorKind kind, const std::string& detail)
        : std::runtime_error(detail), kind_(kind) {}
    SeriesErrorKind kind() const { return kind_; }

  private:
    SeriesErrorKind kind_;
};

const char* to_string(SeriesErrorKind kind);

// Truncated Laurent series over Rational in the single variable q.
//
// A series is known exactly for all exponents < order() and carries an
// O(q^order) tail. coeffs_[i] is the coefficient of q^(valuation()+i);
// the leading stored coefficient is nonzero unless the series is the
// canonical zero (empty run, valuation == order). Immutable after
// construction; all operations return fresh values.
class QSeries {
  public:
    // Canonical zero with O(q^order) tail.
    static QSeries zero(std::int64_t order);
    // c*q^k + O(q^order). Requires order > k when c != 0.
    static QSeries monomial(const Rational& c, std::int64_t k, std::int64_t order);
    static QSeries one(std::int64_t order) { return monomial(1, 0, order); }

    std::int64_t valuation() const { return valuation_; }
    std::int64_t order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }

    // Coefficient of q^e; zero outside the stored run. Exponents at or
    // beyond order() are unknown, asking for them is a contract violation.
    const Rational& coeff(std::int64_t e) const;

    QSeries operator+(const QSeries& rhs) const;
    QSeries operator-(const QSeries& rhs) const;
    QSeries operator*(const QSeries& rhs) const;
    QSeries operator-() const;

    // Scalar multiple (exact, keeps order).
    QSeries scaled(const Rational& c) const;
    // Multiplication by the exact monomial q^k: exponents and order shift by k.
    QSeries shifted(std::int64_t k) const;
    // Restriction to a smaller order (drops known coefficients >= order).
    QSeries truncated(std::int64_t order) const;

    // Writes *this = q^v * u with u a unit known mod q^(order-v) and
    // returns q^(-v) * u^(-1); result order is order() - 2*valuation().
    QSeries inverse() const;

    // s(q^m): exponents and order scale by m (m >= 1).
    QSeries substitute_qpow(int m) const;

    struct Mismatch {
        std::int64_t exponent;
        Rational lhs;
        Rational rhs;
    };
    // Compares all coefficients at exponents < n (Laurent range included).
    // Requires n <= min(order(), rhs.order()).
    static std::optional<Mismatch> first_mismatch(const QSeries& lhs, const QSeries& rhs,
                                                  std::int64_t n);
    static bool eq_upto(const QSeries& lhs, const QSeries& rhs, std::int64_t n) {
        return !first_mismatch(lhs, rhs, n).has_value();
    }

    // "q^-1 + 2 - q^3 + O(q^8)" style rendering, mostly for diagnostics.
    std::string str() const;

  private:
    QSeries(std::int64_t valuation, std::int64_t order, std::vector<Rational> coeffs)
        : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {}
    void normalize();

    std::int64_t valuation_;
    std::int64_t order_;
    std::vector<Rational> coeffs_;
};

}  // namespace qv

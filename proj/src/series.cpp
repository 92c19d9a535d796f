#include "qv/series.hpp"

#include <algorithm>
#include <sstream>

namespace qv {

namespace {
const Rational kZero = 0;
}

const char* to_string(SeriesErrorKind kind) {
    switch (kind) {
        case SeriesErrorKind::NonUnitInverse: return "NonUnitInverse";
        case SeriesErrorKind::NegativeOrder: return "NegativeOrder";
        case SeriesErrorKind::InadmissibleSubstitution: return "InadmissibleSubstitution";
        case SeriesErrorKind::GuardCapExceeded: return "GuardCapExceeded";
    }
    return "UnknownSeriesError";
}

QSeries QSeries::zero(std::int64_t order) {
    return QSeries(order, order, {});
}

QSeries QSeries::monomial(const Rational& c, std::int64_t k, std::int64_t order) {
    if (c == 0) return zero(order);
    if (order <= k)
        throw SeriesError(SeriesErrorKind::NegativeOrder,
                          "monomial exponent " + std::to_string(k) + " at or beyond order " +
                              std::to_string(order));
    return QSeries(k, order, {c});
}

const Rational& QSeries::coeff(std::int64_t e) const {
    if (e >= order_)
        throw SeriesError(SeriesErrorKind::NegativeOrder,
                          "coefficient of q^" + std::to_string(e) + " unknown beyond order " +
                              std::to_string(order_));
    if (e < valuation_ || e >= valuation_ + static_cast<std::int64_t>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

void QSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == 0) --tail;
    if (lead == tail) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    if (lead > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    coeffs_.resize(tail - lead);
    valuation_ += static_cast<std::int64_t>(lead);
}

QSeries QSeries::operator+(const QSeries& rhs) const {
    const std::int64_t order = std::min(order_, rhs.order_);
    if (is_zero() && rhs.is_zero()) return zero(order);
    const std::int64_t lo = std::min(valuation_, rhs.valuation_);
    const std::int64_t hi = std::min(order, std::max(valuation_ + static_cast<std::int64_t>(coeffs_.size()),
                                                     rhs.valuation_ + static_cast<std::int64_t>(rhs.coeffs_.size())));
    if (hi <= lo) return zero(order);
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::int64_t e = valuation_ + static_cast<std::int64_t>(i);
        if (e < hi) out[static_cast<std::size_t>(e - lo)] = coeffs_[i];
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        std::int64_t e = rhs.valuation_ + static_cast<std::int64_t>(i);
        if (e < hi) out[static_cast<std::size_t>(e - lo)] += rhs.coeffs_[i];
    }
    QSeries result(lo, order, std::move(out));
    result.normalize();
    return result;
}

QSeries QSeries::operator-() const {
    QSeries result(*this);
    for (auto& c : result.coeffs_) c = -c;
    return result;
}

QSeries QSeries::operator-(const QSeries& rhs) const {
    return *this + (-rhs);
}

QSeries QSeries::operator*(const QSeries& rhs) const {
    // Sound order: lhs error O(q^N1) scaled by q^v2 and vice versa.
    const std::int64_t order = std::min(order_ + rhs.valuation_, rhs.order_ + valuation_);
    if (is_zero() || rhs.is_zero()) return zero(order);
    const std::int64_t lo = valuation_ + rhs.valuation_;
    if (order <= lo)
        throw SeriesError(SeriesErrorKind::NegativeOrder,
                          "product truncation order collapsed below its valuation");
    std::vector<Rational> out(static_cast<std::size_t>(order - lo));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const std::int64_t base = valuation_ + static_cast<std::int64_t>(i) + rhs.valuation_;
        if (base >= order) break;
        const std::size_t jmax = std::min(rhs.coeffs_.size(), static_cast<std::size_t>(order - base));
        for (std::size_t j = 0; j < jmax; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out[static_cast<std::size_t>(base - lo) + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    QSeries result(lo, order, std::move(out));
    result.normalize();
    return result;
}

QSeries QSeries::scaled(const Rational& c) const {
    if (c == 0 || is_zero()) return zero(order_);
    QSeries result(*this);
    for (auto& x : result.coeffs_) x *= c;
    return result;
}

QSeries QSeries::shifted(std::int64_t k) const {
    QSeries result(*this);
    result.valuation_ += k;
    result.order_ += k;
    return result;
}

QSeries QSeries::truncated(std::int64_t order) const {
    if (order >= order_) return *this;
    if (is_zero() || order <= valuation_) return zero(order);
    std::vector<Rational> out(coeffs_.begin(),
                              coeffs_.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(coeffs_.size()),
                                                                         static_cast<std::ptrdiff_t>(order - valuation_)));
    QSeries result(valuation_, order, std::move(out));
    result.normalize();
    return result;
}

QSeries QSeries::inverse() const {
    if (is_zero())
        throw SeriesError(SeriesErrorKind::NonUnitInverse, "inverse of the zero series");
    const std::int64_t v = valuation_;
    const std::size_t len = static_cast<std::size_t>(order_ - v);  // relative precision of the unit part
    std::vector<Rational> inv(len);
    const Rational& a0 = coeffs_[0];
    inv[0] = 1 / a0;
    for (std::size_t k = 1; k < len; ++k) {
        Rational acc = 0;
        const std::size_t imax = std::min(k, coeffs_.size() - 1);
        for (std::size_t i = 1; i <= imax; ++i) {
            if (coeffs_[i] == 0) continue;
            acc += coeffs_[i] * inv[k - i];
        }
        if (acc != 0) inv[k] = -acc / a0;
    }
    QSeries result(-v, order_ - 2 * v, std::move(inv));
    result.normalize();
    return result;
}

QSeries QSeries::substitute_qpow(int m) const {
    if (m < 1)
        throw SeriesError(SeriesErrorKind::InadmissibleSubstitution,
                          "substitution exponent must be >= 1");
    if (m == 1) return *this;
    if (is_zero()) return zero(order_ * m);
    std::vector<Rational> out(static_cast<std::size_t>(coeffs_.size() - 1) * m + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * m] = coeffs_[i];
    QSeries result(valuation_ * m, order_ * m, std::move(out));
    result.normalize();
    return result;
}

std::optional<QSeries::Mismatch> QSeries::first_mismatch(const QSeries& lhs, const QSeries& rhs,
                                                         std::int64_t n) {
    if (n > lhs.order_ || n > rhs.order_)
        throw SeriesError(SeriesErrorKind::NegativeOrder,
                          "comparison order " + std::to_string(n) + " exceeds operand order " +
                              std::to_string(std::min(lhs.order_, rhs.order_)));
    const std::int64_t lo = std::min(lhs.is_zero() ? n : lhs.valuation_,
                                     rhs.is_zero() ? n : rhs.valuation_);
    for (std::int64_t e = lo; e < n; ++e) {
        const Rational& a = (e < lhs.valuation_ || e >= lhs.valuation_ + static_cast<std::int64_t>(lhs.coeffs_.size()))
                                ? kZero
                                : lhs.coeffs_[static_cast<std::size_t>(e - lhs.valuation_)];
        const Rational& b = (e < rhs.valuation_ || e >= rhs.valuation_ + static_cast<std::int64_t>(rhs.coeffs_.size()))
                                ? kZero
                                : rhs.coeffs_[static_cast<std::size_t>(e - rhs.valuation_)];
        if (a != b) return Mismatch{e, a, b};
    }
    return std::nullopt;
}

std::string QSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const std::int64_t e = valuation_ + static_cast<std::int64_t>(i);
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0 || c != 1) out << c.get_str();
        if (e != 0) {
            if (c != 1) out << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    if (first) out << "0";
    out << " + O(q^" << order_ << ")";
    return out.str();
}

}  // namespace qv

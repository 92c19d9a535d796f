#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qv/series.hpp"

using qv::QSeries;
using qv::Rational;

TEST_CASE("monomial construction and the zero convention") {
    QSeries one = QSeries::monomial(1, 0, 10);
    CHECK(one.valuation() == 0);
    CHECK(one.order() == 10);
    CHECK(one.coeff(0) == 1);
    CHECK(one.coeff(5) == 0);

    QSeries half = QSeries::monomial(qv::rat(-1, 2), 3, 10);
    CHECK(half.coeff(3) == qv::rat(-1, 2));

    QSeries z = QSeries::monomial(0, 5, 10);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 10);  // canonical zero: valuation equals order

    CHECK_THROWS_AS(QSeries::monomial(1, 12, 10), qv::SeriesError);
}

TEST_CASE("addition cancels and renormalizes") {
    QSeries a = QSeries::one(3) + QSeries::monomial(1, 1, 3);
    QSeries b = QSeries::one(3) - QSeries::monomial(1, 1, 3);
    QSeries s = a + b;
    CHECK(s.coeff(0) == 2);
    CHECK(s.coeff(1) == 0);
    CHECK(s.valuation() == 0);

    // Laurent cancellation: q^-1 + (-q^-1 + 1) = 1, order min(2, 5).
    QSeries l1 = QSeries::monomial(1, -1, 2);
    QSeries l2 = QSeries::monomial(-1, -1, 5) + QSeries::one(5);
    QSeries r = l1 + l2;
    CHECK(r.valuation() == 0);
    CHECK(r.order() == 2);
    CHECK(r.coeff(0) == 1);

    QSeries z = QSeries::zero(8);
    CHECK((a + z).coeff(1) == 1);
    CHECK((a + z).order() == 3);
}

TEST_CASE("multiplication tracks the sound truncation order") {
    QSeries a = QSeries::one(3) + QSeries::monomial(1, 1, 3);
    QSeries b = QSeries::one(3) - QSeries::monomial(1, 1, 3);
    QSeries p = a * b;  // 1 - q^2 + O(q^3)
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);
    CHECK(p.order() == 3);

    QSeries mono2 = QSeries::monomial(1, 2, 7);
    QSeries u = QSeries::one(5);
    CHECK((mono2 * u).order() == 7);
    CHECK((mono2 * u).valuation() == 2);

    QSeries sq = (QSeries::one(4) - QSeries::monomial(1, 1, 4));
    QSeries sq2 = sq * sq;
    CHECK(sq2.coeff(0) == 1);
    CHECK(sq2.coeff(1) == -2);
    CHECK(sq2.coeff(2) == 1);
}

TEST_CASE("inverse: geometric series and monomial handling") {
    QSeries g = QSeries::one(5) - QSeries::monomial(1, 1, 5);
    QSeries gi = g.inverse();
    for (int e = 0; e < 5; ++e) CHECK(gi.coeff(e) == 1);

    QSeries m = QSeries::monomial(1, 1, 5);  // q * (1 + O(q^4))
    QSeries mi = m.inverse();
    CHECK(mi.valuation() == -1);
    CHECK(mi.order() == 3);

    QSeries f = QSeries::one(4) - QSeries::monomial(1, 1, 4) - QSeries::monomial(1, 2, 4);
    QSeries fi = f.inverse();
    CHECK(fi.coeff(0) == 1);
    CHECK(fi.coeff(1) == 1);
    CHECK(fi.coeff(2) == 2);
    CHECK(fi.coeff(3) == 3);

    CHECK_THROWS_AS(QSeries::zero(5).inverse(), qv::SeriesError);
}

TEST_CASE("substitution q -> q^m scales exponents and order") {
    QSeries s = QSeries::one(3) + QSeries::monomial(1, 1, 3);
    QSeries t = s.substitute_qpow(2);
    CHECK(t.order() == 6);
    CHECK(t.coeff(0) == 1);
    CHECK(t.coeff(2) == 1);
    CHECK(t.coeff(1) == 0);

    QSeries l = QSeries::monomial(1, -1, 2) - QSeries::monomial(1, 1, 2);
    QSeries l3 = l.substitute_qpow(3);
    CHECK(l3.valuation() == -3);
    CHECK(l3.coeff(-3) == 1);
    CHECK(l3.coeff(3) == -1);
    CHECK(l3.order() == 6);
}

TEST_CASE("comparison includes the Laurent range and respects orders") {
    QSeries a = QSeries::one(5);
    QSeries b = QSeries::one(5) + QSeries::monomial(1, 7, 9);
    CHECK(QSeries::eq_upto(a, b.truncated(5), 5));

    QSeries c = QSeries::one(4) + QSeries::monomial(1, 1, 4);
    QSeries d = QSeries::one(4) - QSeries::monomial(1, 1, 4);
    auto mm = QSeries::first_mismatch(c, d, 2);
    REQUIRE(mm.has_value());
    CHECK(mm->exponent == 1);
    CHECK(mm->lhs == 1);
    CHECK(mm->rhs == -1);

    CHECK_THROWS_AS((void)QSeries::first_mismatch(a, b, 9), qv::SeriesError);
}

TEST_CASE("ring axioms on random series at a fixed order") {
    std::mt19937 rng(20240926);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> val(-3, 3);
    auto random_series = [&] {
        const int v = val(rng);
        QSeries s = QSeries::zero(12);
        for (int e = v; e < 12; ++e) {
            const int c = coeff(rng);
            if (c != 0) s = s + QSeries::monomial(c, e, 12);
        }
        return s;
    };
    for (int round = 0; round < 25; ++round) {
        QSeries a = random_series(), b = random_series(), c = random_series();
        QSeries lhs = (a + b) + c;
        QSeries rhs = a + (b + c);
        CHECK(QSeries::eq_upto(lhs, rhs, std::min(lhs.order(), rhs.order())));
        QSeries lm = a * (b + c);
        QSeries rm = a * b + a * c;
        CHECK(QSeries::eq_upto(lm, rm, std::min(lm.order(), rm.order())));
        QSeries ab = a * b;
        QSeries ba = b * a;
        CHECK(QSeries::eq_upto(ab, ba, std::min(ab.order(), ba.order())));
        if (!a.is_zero()) {
            QSeries unit = a * a.inverse();
            CHECK(unit.coeff(0) == 1);
            for (std::int64_t e = std::max<std::int64_t>(1, unit.valuation()); e < unit.order(); ++e)
                CHECK(unit.coeff(e) == 0);
        }
    }
}

TEST_CASE("substitution round trip picks out scaled exponents") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    QSeries s = QSeries::zero(9);
    for (int e = -2; e < 9; ++e) {
        const int c = coeff(rng);
        if (c != 0) s = s + QSeries::monomial(c, e, 9);
    }
    QSeries t = s.substitute_qpow(3);
    for (std::int64_t e = -2; e < 9; ++e) CHECK(t.coeff(3 * e) == s.coeff(e));
}

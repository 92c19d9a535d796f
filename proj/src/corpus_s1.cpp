// Registry: introduction chapter. Foundational summations, the triple-series
// transformation with its corollaries, and the first Hecke-type chains.

#include "corpus_util.hpp"

namespace qv::corpus_detail {

namespace {

const ParamValue kQ{1, 1};
const ParamValue kOne{1, 0};
const ParamValue kQ2{1, 2};

ParamValue q_over(const ParamValue& p) { return kQ / p; }

// Very-well-poised outer term: weight * prod_x (q/x;q)_n/(alpha x;q)_n * z^n.
QSeries rogers_term(const ParamValue& alpha, const std::vector<ParamValue>& xs,
                    const ParamValue& z, std::int64_t n, std::int64_t w) {
    QSeries t = vwp_weight(alpha, n, {1}, w);
    for (const auto& x : xs) {
        t = t * poch_finite(q_over(x), n, {1}, w);
        QSeries den = poch_finite(alpha * x, n, {1}, w);
        if (den.is_zero())
            throw SeriesError(SeriesErrorKind::NonUnitInverse, "vanishing (alpha x;q)_n");
        t = t * den.inverse();
        if (t.is_zero()) return t;
    }
    const ParamValue zn = z.pow(n);
    if (zn.is_zero()) return n == 0 ? t : QSeries::zero(w);
    return t.scaled(zn.c).shifted(zn.k);
}

// Inner double-sum column of the triple transformation.
QSeries triple_inner(const ParamValue& alpha, const ParamValue& beta, const ParamValue& gamma,
                     const ParamValue& a, const ParamValue& b, const ParamValue& d4,
                     const ParamValue& phi_n1, const ParamValue& phi_n2, const ParamValue& z0,
                     std::int64_t n, std::int64_t w, const SumGuard& guard) {
    QSeries acc = QSeries::zero(w);
    for (std::int64_t k = 0; k <= n; ++k) {
        QSeries cell = mul_sound(
            [&](std::int64_t v) {
                return poch_ratio({ParamValue{1, -n}, ParamValue{alpha.c, alpha.k + n}, beta, gamma},
                                  {kQ, q_over(a), q_over(b), d4}, k, {1}, v)
                    .shifted(k);
            },
            [&](std::int64_t v) {
                HyperSpec inner{{ParamValue{1, -k}, phi_n1, phi_n2},
                                {beta, gamma},
                                {1},
                                ParamValue{z0.c, z0.k + k}};
                return phi_eval(inner, v, guard);
            },
            w);
        acc = acc + cell;
    }
    return acc;
}

}  // namespace

void register_s1(std::vector<IdentityRecord>& out) {
    // q-binomial theorem.
    out.push_back(IdentityRecord{
        "S1-QBINOMIAL", "q-binomial", "product ratio (ax;q)inf/(bx;q)inf as a power series", "s1",
        Family::Product,
        {any_slot("a"), SlotSpec{"b", [](const ParamValue& p) { return !p.is_zero(); }},
         any_slot("x")},
        {assign({{"a", {-1, 1}}, {"b", {1, 1}}, {"x", {1, 1}}}),
         assign({{"a", {1, 2}}, {"b", {rat(1, 2), 0}}, {"x", {1, 1}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            const auto a = at(as, "a"), b = at(as, "b"), x = at(as, "x");
            return infprod({a * x}, {b * x}, {1}, order);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto a = at(as, "a"), b = at(as, "b"), x = at(as, "x");
            return sum_guarded(
                [&, order](std::int64_t n) {
                    return eval_sound(
                        [&](std::int64_t w) {
                            const ParamValue bx = (b * x).pow(n);
                            return poch_finite(a / b, n, {1}, w) *
                                   poch_finite(kQ, n, {1}, w).inverse().scaled(bx.c).shifted(bx.k);
                        },
                        order);
                },
                order, guard);
        },
        "", 0});

    // Euler: 1/(bx;q)inf.
    out.push_back(IdentityRecord{
        "S1-EULER-SUM", "euler-1", "reciprocal infinite product as the partition-style sum", "s1",
        Family::Product,
        {valuation_slot("b", 0, false), any_slot("x")},
        {assign({{"b", {1, 1}}, {"x", {1, 0}}}), assign({{"b", {-1, 0}}, {"x", {1, 2}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            return infprod({}, {at(as, "b") * at(as, "x")}, {1}, order);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const ParamValue bx = at(as, "b") * at(as, "x");
            return sum_guarded(
                [&, order](std::int64_t n) {
                    return eval_sound(
                        [&](std::int64_t w) {
                            const ParamValue p = bx.pow(n);
                            return poch_finite(kQ, n, {1}, w).inverse().scaled(p.c).shifted(p.k);
                        },
                        order);
                },
                order, guard);
        },
        "", 0});

    // Euler: (ax;q)inf.
    out.push_back(IdentityRecord{
        "S1-EULER-PRODUCT", "euler-2", "infinite product as an alternating Gaussian sum", "s1",
        Family::Product,
        {any_slot("a"), any_slot("x")},
        {assign({{"a", {1, 1}}, {"x", {1, 0}}}), assign({{"a", {rat(1, 2), 0}}, {"x", {1, 0}}}),
         assign({{"a", {-1, 3}}, {"x", {1, 0}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            return poch_infinite(at(as, "a") * at(as, "x"), {1}, order);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const ParamValue ax = at(as, "a") * at(as, "x");
            return sum_guarded(
                [&, order](std::int64_t n) {
                    return eval_sound(
                        [&](std::int64_t w) {
                            const ParamValue p = (-ax).pow(n);
                            return poch_finite(kQ, n, {1}, w)
                                .inverse()
                                .scaled(p.c)
                                .shifted(p.k + n * (n - 1) / 2);
                        },
                        order);
                },
                order, guard);
        },
        "", 0});

    // q-Pfaff-Saalschuetz.
    out.push_back(IdentityRecord{
        "S1-QPFAFF", "qpfaff", "balanced terminating 3phi2 evaluates in closed form", "s1",
        Family::Terminating,
        {any_slot("alpha"), nonpole_slot("a", -3, 1, false), nonpole_slot("b", -3, 1, false),
         index_slot("n", 0, 40)},
        {assign({{"alpha", {1, 1}}, {"a", {-1, 1}}, {"b", {1, 2}}, {"n", {3, 0}}}),
         assign({{"alpha", {1, 1}}, {"a", {-1, 1}}, {"b", {1, 2}}, {"n", {5, 0}}}),
         assign({{"alpha", {rat(1, 2), 0}}, {"a", {1, 1}}, {"b", {-1, 2}}, {"n", {4, 0}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), a = at(as, "a"), b = at(as, "b");
            const std::int64_t n = int_slot(as, "n");
            HyperSpec spec{{ParamValue{1, -n}, ParamValue{alpha.c, alpha.k + n}, alpha * a * b / kQ},
                           {alpha * a, alpha * b},
                           {1},
                           kQ};
            return phi_eval(spec, order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            const auto alpha = at(as, "alpha"), a = at(as, "a"), b = at(as, "b");
            const std::int64_t n = int_slot(as, "n");
            return eval_sound(
                [&](std::int64_t w) {
                    const ParamValue z = (alpha * a * b / kQ).pow(n);
                    return poch_ratio({q_over(a), q_over(b)}, {alpha * a, alpha * b}, n, {1}, w)
                        .scaled(z.c)
                        .shifted(z.k);
                },
                order);
        },
        "n", 0});

    // q-Chu-Vandermonde.
    out.push_back(IdentityRecord{
        "S1-QCHUVAN", "qchu-van", "terminating 2phi1 evaluates in closed form", "s1",
        Family::Terminating,
        {any_slot("alpha"), nonpole_slot("a", -3, 1, false), index_slot("n", 0, 40)},
        {assign({{"alpha", {1, 1}}, {"a", {1, 2}}, {"n", {1, 0}}}),
         assign({{"alpha", {1, 1}}, {"a", {1, 2}}, {"n", {5, 0}}}),
         assign({{"alpha", {rat(1, 3), 1}}, {"a", {-1, 1}}, {"n", {4, 0}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), a = at(as, "a");
            const std::int64_t n = int_slot(as, "n");
            HyperSpec spec{{ParamValue{1, -n}, ParamValue{alpha.c, alpha.k + n}},
                           {alpha * a},
                           {1},
                           kQ};
            return phi_eval(spec, order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            const auto alpha = at(as, "alpha"), a = at(as, "a");
            const std::int64_t n = int_slot(as, "n");
            return eval_sound(
                [&](std::int64_t w) {
                    const ParamValue z = (-(alpha * a)).pow(n);
                    return poch_ratio({q_over(a)}, {alpha * a}, n, {1}, w)
                        .scaled(z.c)
                        .shifted(z.k + n * (n - 1) / 2);
                },
                order);
        },
        "n", 0});

    // Rogers nonterminating 6phi5 in very-well-poised form.
    out.push_back(IdentityRecord{
        "S1-PROP-1.2-ROGERS65", "rogersthm", "very-well-poised nonterminating sum equals a product",
        "s1", Family::Product,
        {any_slot("alpha"), nonpole_slot("a", -2, 2), nonpole_slot("b", -2, 2),
         nonpole_slot("c", -2, 2)},
        {assign({{"alpha", {1, 1}}, {"a", {-1, 1}}, {"b", {1, 2}}, {"c", {1, 1}}}),
         assign({{"alpha", {1, 2}}, {"a", {1, 1}}, {"b", {1, 1}}, {"c", {-1, 1}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), a = at(as, "a"), b = at(as, "b"), c = at(as, "c");
            const ParamValue z = alpha * a * b * c / kQ2;
            return sum_guarded(
                [&, order](std::int64_t n) {
                    return eval_sound(
                        [&](std::int64_t w) { return rogers_term(alpha, {a, b, c}, z, n, w); },
                        order);
                },
                order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            const auto alpha = at(as, "alpha"), a = at(as, "a"), b = at(as, "b"), c = at(as, "c");
            return infprod({alpha * kQ, alpha * a * b / kQ, alpha * a * c / kQ, alpha * b * c / kQ},
                           {alpha * a, alpha * b, alpha * c, alpha * a * b * c / kQ2}, {1}, order);
        },
        "", 0});

    // Theorem 1.3: one extra 4phi3 layer over the 6phi5.
    out.push_back(IdentityRecord{
        "S1-THM-1.3", "rogersliuthm", "double series extension of the very-well-poised product",
        "s1", Family::Product,
        {any_slot("alpha"), any_slot("beta"), any_slot("gamma"), nonpole_slot("a", -2, 2, false),
         nonpole_slot("b", -2, 2, false), nonpole_slot("c", -2, 2)},
        {assign({{"alpha", {1, 1}}, {"beta", {-1, 1}}, {"gamma", {1, 2}}, {"a", {-1, 1}},
                 {"b", {-1, 2}}, {"c", {1, 1}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), beta = at(as, "beta"), gamma = at(as, "gamma"),
                       a = at(as, "a"), b = at(as, "b"), c = at(as, "c");
            const ParamValue z = alpha * a * b * c / kQ2;
            return sum_guarded(
                [&, order](std::int64_t n) {
                    return eval_sound(
                        [&](std::int64_t w) {
                            QSeries outer = rogers_term(alpha, {a, b, c}, z, n, w);
                            if (outer.is_zero()) return outer;
                            HyperSpec inner{
                                {ParamValue{1, -n}, ParamValue{alpha.c, alpha.k + n}, beta, gamma},
                                {q_over(a), q_over(b), alpha * beta * gamma * a * b / kQ},
                                {1},
                                kQ};
                            return outer * phi_eval(inner, w, guard);
                        },
                        order);
                },
                order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            const auto alpha = at(as, "alpha"), beta = at(as, "beta"), gamma = at(as, "gamma"),
                       a = at(as, "a"), b = at(as, "b"), c = at(as, "c");
            return infprod({alpha * kQ, alpha * a * c / kQ, alpha * b * c / kQ,
                            alpha * beta * a * b / kQ, alpha * gamma * a * b / kQ,
                            alpha * beta * gamma * a * b * c / kQ2},
                           {alpha * a, alpha * b, alpha * c, alpha * beta * a * b * c / kQ2,
                            alpha * gamma * a * b * c / kQ2, alpha * beta * gamma * a * b / kQ},
                           {1}, order);
        },
        "", 0});

    // Theorem 1.4: the triple-series transformation.
    out.push_back(IdentityRecord{
        "S1-THM-1.4", "liuthma", "triple series equals a product times a 3phi2 tail", "s1",
        Family::Product,
        {any_slot("alpha"), any_slot("beta"), any_slot("gamma"), nonpole_slot("a", -2, 2, false),
         nonpole_slot("b", -2, 2, false), nonpole_slot("c", -2, 2),
         SlotSpec{"u", [](const ParamValue& p) { return !p.is_zero(); }},
         SlotSpec{"v", [](const ParamValue& p) { return !p.is_zero(); }}},
        {assign({{"alpha", {1, 1}}, {"beta", {-1, 1}}, {"gamma", {1, 2}}, {"a", {-1, 1}},
                 {"b", {-1, 2}}, {"c", {-1, 1}}, {"u", {1, 1}}, {"v", {-1, 1}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), beta = at(as, "beta"), gamma = at(as, "gamma"),
                       a = at(as, "a"), b = at(as, "b"), c = at(as, "c"), u = at(as, "u"),
                       v = at(as, "v");
            const ParamValue z = alpha * a * b * c / kQ2;
            const ParamValue bguv = beta * gamma * u * v;
            return sum_guarded(
                [&, order](std::int64_t n) {
                    return eval_sound(
                        [&](std::int64_t w) {
                            QSeries outer = rogers_term(alpha, {a, b, c}, z, n, w);
                            if (outer.is_zero()) return outer;
                            return outer * triple_inner(alpha, beta, gamma, a, b, bguv, kOne / u,
                                                        kOne / v, bguv, n, w, guard);
                        },
                        order);
                },
                order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), beta = at(as, "beta"), gamma = at(as, "gamma"),
                       a = at(as, "a"), b = at(as, "b"), c = at(as, "c"), u = at(as, "u"),
                       v = at(as, "v");
            QSeries pre = infprod({alpha * kQ, alpha * a * c / kQ, alpha * b * c / kQ,
                                   alpha * beta * a * b / kQ, alpha * gamma * a * b / kQ,
                                   beta * gamma * c * u * v / kQ},
                                  {alpha * a, alpha * b, alpha * c, alpha * beta * a * b * c / kQ2,
                                   alpha * gamma * a * b * c / kQ2, beta * gamma * u * v},
                                  {1}, order);
            HyperSpec tail{{q_over(c), alpha * a * b / (kQ * u), alpha * a * b / (kQ * v)},
                           {alpha * beta * a * b / kQ, alpha * gamma * a * b / kQ},
                           {1},
                           beta * gamma * c * u * v / kQ};
            return pre * phi_eval(tail, order, guard);
        },
        "", 0});

    // Corollary 1.5: v = alpha a b / q collapses the tail.
    out.push_back(IdentityRecord{
        "S1-COR-1.5", "liuthmb", "triple series equals a pure product at v = alpha a b/q", "s1",
        Family::Product,
        {any_slot("alpha"), any_slot("beta"), any_slot("gamma"), nonpole_slot("a", -2, 2, false),
         nonpole_slot("b", -2, 2, false), nonpole_slot("c", -2, 2),
         SlotSpec{"u", [](const ParamValue& p) { return !p.is_zero(); }}},
        {assign({{"alpha", {1, 1}}, {"beta", {-1, 1}}, {"gamma", {1, 2}}, {"a", {-1, 1}},
                 {"b", {-1, 2}}, {"c", {-1, 1}}, {"u", {1, 1}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), beta = at(as, "beta"), gamma = at(as, "gamma"),
                       a = at(as, "a"), b = at(as, "b"), c = at(as, "c"), u = at(as, "u");
            const ParamValue z = alpha * a * b * c / kQ2;
            const ParamValue d4 = alpha * beta * gamma * a * b * u / kQ;
            return sum_guarded(
                [&, order](std::int64_t n) {
                    return eval_sound(
                        [&](std::int64_t w) {
                            QSeries outer = rogers_term(alpha, {a, b, c}, z, n, w);
                            if (outer.is_zero()) return outer;
                            return outer * triple_inner(alpha, beta, gamma, a, b, d4, kOne / u,
                                                        kQ / (alpha * a * b), d4, n, w, guard);
                        },
                        order);
                },
                order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            const auto alpha = at(as, "alpha"), beta = at(as, "beta"), gamma = at(as, "gamma"),
                       a = at(as, "a"), b = at(as, "b"), c = at(as, "c"), u = at(as, "u");
            return infprod({alpha * kQ, alpha * a * c / kQ, alpha * b * c / kQ,
                            alpha * beta * a * b / kQ, alpha * gamma * a * b / kQ,
                            alpha * beta * gamma * a * b * c * u / kQ2},
                           {alpha * a, alpha * b, alpha * c, alpha * beta * a * b * c / kQ2,
                            alpha * gamma * a * b * c / kQ2, alpha * beta * gamma * a * b * u / kQ},
                           {1}, order);
        },
        "", 0});

    // Corollary 1.6: v = 1 collapses the inner column.
    out.push_back(IdentityRecord{
        "S1-COR-1.6", "liuthmc", "4phi3-weighted sum equals a product times a 3phi2 tail", "s1",
        Family::Product,
        {any_slot("alpha"), any_slot("beta"), any_slot("gamma"), nonpole_slot("a", -2, 2, false),
         nonpole_slot("b", -2, 2, false), nonpole_slot("c", -2, 2),
         SlotSpec{"u", [](const ParamValue& p) { return !p.is_zero(); }}},
        {assign({{"alpha", {1, 1}}, {"beta", {-1, 1}}, {"gamma", {1, 2}}, {"a", {-1, 1}},
                 {"b", {-1, 2}}, {"c", {-1, 1}}, {"u", {1, 1}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), beta = at(as, "beta"), gamma = at(as, "gamma"),
                       a = at(as, "a"), b = at(as, "b"), c = at(as, "c"), u = at(as, "u");
            const ParamValue z = alpha * a * b * c / kQ2;
            return sum_guarded(
                [&, order](std::int64_t n) {
                    return eval_sound(
                        [&](std::int64_t w) {
                            QSeries outer = rogers_term(alpha, {a, b, c}, z, n, w);
                            if (outer.is_zero()) return outer;
                            HyperSpec inner{
                                {ParamValue{1, -n}, ParamValue{alpha.c, alpha.k + n}, beta, gamma},
                                {q_over(a), q_over(b), beta * gamma * u},
                                {1},
                                kQ};
                            return outer * phi_eval(inner, w, guard);
                        },
                        order);
                },
                order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto alpha = at(as, "alpha"), beta = at(as, "beta"), gamma = at(as, "gamma"),
                       a = at(as, "a"), b = at(as, "b"), c = at(as, "c"), u = at(as, "u");
            QSeries pre = infprod({alpha * kQ, alpha * a * c / kQ, alpha * b * c / kQ,
                                   alpha * beta * a * b / kQ, alpha * gamma * a * b / kQ,
                                   beta * gamma * c * u / kQ},
                                  {alpha * a, alpha * b, alpha * c, alpha * beta * a * b * c / kQ2,
                                   alpha * gamma * a * b * c / kQ2, beta * gamma * u},
                                  {1}, order);
            HyperSpec tail{{q_over(c), alpha * a * b / (kQ * u), alpha * a * b / kQ},
                           {alpha * beta * a * b / kQ, alpha * gamma * a * b / kQ},
                           {1},
                           beta * gamma * c * u / kQ};
            return pre * phi_eval(tail, order, guard);
        },
        "", 0});

    // Theorem 1.7: forward-range Hecke double sum for the triangular family.
    out.push_back(IdentityRecord{
        "S1-THM-1.7", "trianHecke", "forward Hecke double sum equals a product times a single sum",
        "s1", Family::Hecke,
        {valuation_slot("a", 0), valuation_slot("c", 0)},
        {assign({{"a", {1, 1}}, {"c", {1, 1}}}), assign({{"a", {-1, 1}}, {"c", {-1, 1}}}),
         assign({{"a", {1, 2}}, {"c", {rat(1, 2), 0}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto a = at(as, "a"), c = at(as, "c");
            return hecke1(
                [&](std::int64_t n, std::int64_t w) {
                    return poch_shifted_pow(a, 2, n, {2}, w) * poch_shifted_pow(c, 2, n, {2}, w) *
                           poch_ratio({}, {kQ2 * a, kQ2 * c}, n, {2}, w) * one_minus(4 * n + 2, w);
                },
                InnerRange::Forward, quad(2, 0, rat(-1, 2), rat(-1, 2)), hecke_sign::plus, order,
                guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto a = at(as, "a"), c = at(as, "c");
            QSeries pre = infprod({a * c, kQ2}, {kQ2 * a, kQ2 * c}, {2}, order);
            return pre * sum1(
                             [&](std::int64_t n, std::int64_t w) {
                                 return poch_shifted_pow(a, 2, n, {2}, w) *
                                        poch_shifted_pow(c, 2, n, {2}, w) *
                                        poch_finite(kQ, 2 * n, {1}, w).inverse().shifted(-n);
                             },
                             order, guard);
        },
        "", 0});

    struct HeckeDisplay {
        const char* id;
        const char* label;
        const char* summary;
        SideBuilder lhs;
        SideBuilder rhs;
    };
    auto push_plain = [&out](const HeckeDisplay& d) {
        out.push_back(IdentityRecord{d.id, d.label, d.summary, "s1", Family::Hecke, {}, {Assignment{}},
                                     d.lhs, d.rhs, "", 0});
    };

    // trinumbers chain: the displayed specializations of Theorem 1.7.
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM2", "trinumbers:eqn2", "a = c = 0 case of the forward double sum",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(kQ, 2 * n, {1}, w).inverse().shifted(2 * n * n + n);
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return infprod({}, {kQ2}, {2}, order) *
                   hecke1([](std::int64_t n, std::int64_t w) { return one_minus(4 * n + 2, w); },
                          InnerRange::Forward, quad(4, 2, rat(-1, 2), rat(-1, 2)),
                          hecke_sign::plus, order, guard);
        }});
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM3", "trinumbers:eqn3", "(a, c) = (1, 0) case of the forward double sum",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(kQ, n, {2}, w).inverse().scaled(sign_pow(n)).shifted(n * n);
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return hecke1(
                [](std::int64_t n, std::int64_t w) {
                    return one_minus(4 * n + 2, w).scaled(sign_pow(n));
                },
                InnerRange::Forward, quad(3, 1, rat(-1, 2), rat(-1, 2)), hecke_sign::plus, order,
                guard);
        }});
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM4", "trinumbers chain", "sign-twisted variant after replacing q by -q",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(ParamValue{-1, 1}, n, {2}, w).inverse().shifted(n * n);
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return hecke1([](std::int64_t n, std::int64_t w) { return one_minus(4 * n + 2, w); },
                          InnerRange::Forward, quad(3, 1, rat(-1, 2), rat(-1, 2)),
                          [](std::int64_t n, std::int64_t j) {
                              return (n + j * (j + 1) / 2) % 2 == 0 ? 1 : -1;
                          },
                          order, guard);
        }});
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM5", "trinumbers chain", "(a, c) = (-1, 0) case of the forward double sum",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(ParamValue{-1, 2}, n, {2}, w) *
                           poch_finite(kQ, 2 * n, {1}, w).inverse().shifted(n * n);
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return infprod({ParamValue{-1, 2}}, {kQ2}, {2}, order) *
                   hecke1([](std::int64_t n, std::int64_t w) { return one_minus(4 * n + 2, w); },
                          InnerRange::Forward, quad(3, 1, rat(-1, 2), rat(-1, 2)),
                          hecke_sign::plus, order, guard);
        }});
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM6", "trinumbers chain", "(a, c) = (q, 0) case of the forward double sum",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(kQ2, n, {2}, w)
                        .inverse()
                        .scaled(sign_pow(n))
                        .shifted(n * n + n);
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return infprod({kQ}, {kQ2}, {2}, order) *
                   hecke1(
                       [](std::int64_t n, std::int64_t w) {
                           return one_plus(2 * n + 1, w).scaled(sign_pow(n));
                       },
                       InnerRange::Forward, quad(3, 2, rat(-1, 2), rat(-1, 2)), hecke_sign::plus,
                       order, guard);
        }});
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM6B", "trinumbers chain", "a = c = q case with the rational theta weight",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(kQ, n, {2}, w) *
                           poch_finite(kQ2, n, {2}, w).inverse().shifted(n);
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return infprod({kQ, kQ}, {kQ2, kQ2}, {2}, order) *
                   hecke1(
                       [](std::int64_t n, std::int64_t w) {
                           return one_plus(2 * n + 1, w) * one_minus(2 * n + 1, w).inverse();
                       },
                       InnerRange::Forward, quad(2, 2, rat(-1, 2), rat(-1, 2)), hecke_sign::plus,
                       order, guard);
        }});

    // q-binomial specialization used to close the c = q column.
    out.push_back(IdentityRecord{
        "S1-EQ-QBIN-SPEC", "q-binomial at base q^2", "single-parameter binomial summation", "s1",
        Family::Product,
        {valuation_slot("a", 0)},
        {assign({{"a", {1, 1}}}), assign({{"a", {-1, 2}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto a = at(as, "a");
            return sum1(
                [&](std::int64_t n, std::int64_t w) {
                    return poch_shifted_pow(a, 2, n, {2}, w) * poch_finite(kQ2, n, {2}, w).inverse();
                },
                order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            return infprod({kQ2}, {at(as, "a")}, {2}, order);
        },
        "", 0});

    // c = q column of Theorem 1.7 with a free.
    out.push_back(IdentityRecord{
        "S1-EQ-TRINUM7", "trinumbers: eqn7", "product equals the weighted forward double sum", "s1",
        Family::Hecke,
        {SlotSpec{"a", [](const ParamValue& p) {
                      return p.is_zero() || (p.k >= 0 && !(p.c == 1 && p.k == 0));
                  }}},
        {assign({{"a", {-1, 1}}}), assign({{"a", {1, 2}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            const auto a = at(as, "a");
            return infprod({kQ2, kQ2, kQ * a}, {kQ, a, kQ2 * a}, {2}, order);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto a = at(as, "a");
            return hecke1(
                [&](std::int64_t n, std::int64_t w) {
                    return poch_shifted_pow(a, 2, n, {2}, w) *
                           poch_ratio({}, {kQ2 * a}, n, {2}, w) * one_plus(2 * n + 1, w);
                },
                InnerRange::Forward, quad(2, 1, rat(-1, 2), rat(-1, 2)), hecke_sign::plus, order,
                guard);
        },
        "", 0});
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM8", "trinumbers:eqn8", "cube of the triangular theta as a Hecke double sum",
        [](const Assignment&, std::int64_t order, const SumGuard&) {
            QSeries t = theta_tri(1, order);
            return t * t * t;
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return hecke1(
                [](std::int64_t n, std::int64_t w) {
                    return one_plus(2 * n + 1, w) * one_minus(2 * n + 1, w).inverse();
                },
                InnerRange::Forward, quad(2, 2, rat(-1, 2), rat(-1, 2)), hecke_sign::plus, order,
                guard);
        }});
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM9", "trinumbers chain", "a = -q case of the c = q column",
        [](const Assignment&, std::int64_t order, const SumGuard&) {
            return infprod({kQ2, kQ2, ParamValue{-1, 2}},
                           {kQ, ParamValue{-1, 1}, ParamValue{-1, 1}}, {2}, order);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return hecke1(
                [](std::int64_t n, std::int64_t w) { return QSeries::monomial(sign_pow(n), 0, w); },
                InnerRange::Forward, quad(2, 2, rat(-1, 2), rat(-1, 2)), hecke_sign::plus, order,
                guard);
        }});
    push_plain(HeckeDisplay{
        "S1-EQ-TRINUM10", "trinumbers chain", "a = 0 case of the c = q column",
        [](const Assignment&, std::int64_t order, const SumGuard&) {
            return infprod({kQ2, kQ2}, {kQ}, {2}, order);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return hecke1(
                [](std::int64_t n, std::int64_t w) {
                    return one_plus(2 * n + 1, w).scaled(sign_pow(n));
                },
                InnerRange::Forward, quad(3, 2, rat(-1, 2), rat(-1, 2)), hecke_sign::plus, order,
                guard);
        }});

    // Theorem 1.8, both printed forms, over monomial a.
    auto liuhr_lhs = [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
        const auto a = at(as, "a");
        QSeries pre = infprod({-a, kQ}, {a, ParamValue{-1, 1}}, {1}, order);
        return pre * sum1(
                         [&](std::int64_t n, std::int64_t w) {
                             QSeries den = poch_finite(-a, n, {1}, w);
                             if (den.is_zero())
                                 throw SeriesError(SeriesErrorKind::NonUnitInverse,
                                                   "(-a;q)_n vanishes");
                             return den.inverse().shifted(n * (n - 1) / 2);
                         },
                         order, guard);
    };
    out.push_back(IdentityRecord{
        "S1-THM-1.8-A", "liuhr:eqn1", "partial-theta style sum as a symmetric Hecke double sum",
        "s1", Family::Hecke,
        {SlotSpec{"a", [](const ParamValue& p) {
                      return !p.is_zero() && !(p.c == 1 && p.k >= 0) && !(p.c == -1 && p.k == 0);
                  }}},
        {assign({{"a", {-1, 1}}}), assign({{"a", {1, 2}}}), assign({{"a", {rat(1, 2), 0}}})},
        liuhr_lhs,
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto a = at(as, "a");
            return hecke1(
                [&](std::int64_t n, std::int64_t w) {
                    QSeries ratio_part = poch_shifted_pow(a, 1, n, {1}, w) *
                                         poch_ratio({}, {a}, n, {1}, w);
                    QSeries frac = (a.series(w) - QSeries::monomial(1, n + 1, w)) *
                                   (QSeries::one(w) - a.series(w).shifted(n)).inverse();
                    QSeries weight = QSeries::one(w) + QSeries::monomial(1, n, w) +
                                     one_plus(n + 1, w) * frac.shifted(2 * n);
                    return ratio_part * weight;
                },
                InnerRange::Symmetric, quad(rat(3, 2), rat(-1, 2), -1, 0), hecke_sign::alt_nj,
                order, guard);
        },
        "", 0});
    out.push_back(IdentityRecord{
        "S1-THM-1.8-B", "liuhr:eqn2", "split form with the constant column made explicit", "s1",
        Family::Hecke,
        {SlotSpec{"a", [](const ParamValue& p) {
                      return !p.is_zero() && !(p.c == 1 && p.k >= 0) && !(p.c == -1 && p.k == 0);
                  }}},
        {assign({{"a", {-1, 1}}}), assign({{"a", {1, 2}}})},
        liuhr_lhs,
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const auto a = at(as, "a");
            QSeries first =
                QSeries::monomial(2, 0, order) +
                sum1(
                    [&](std::int64_t n, std::int64_t w) {
                        if (n == 0) return QSeries::zero(w);
                        return (one_plus(n, w) * poch_shifted_pow(a, 1, n, {1}, w) *
                                poch_ratio({}, {a}, n, {1}, w))
                            .scaled(2)
                            .shifted(n * (n - 1) / 2);
                    },
                    order, guard);
            // Truncated symmetric range |j| < n, built directly.
            QSeries second = sum_guarded(
                [&, order](std::int64_t n) {
                    if (n == 0) return QSeries::zero(order);
                    return eval_sound(
                        [&](std::int64_t w) {
                            QSeries weight = one_minus(2 * n, w) *
                                             poch_shifted_pow(a, 1, n, {1}, w).scaled(sign_pow(n)) *
                                             poch_ratio({}, {a}, n, {1}, w);
                            QSeries acc = QSeries::zero(w);
                            if (weight.is_zero()) return acc;
                            for (std::int64_t j = -(n - 1); j <= n - 1; ++j) {
                                const std::int64_t e = 3 * n * (n - 1) / 2 - j * j;
                                acc = acc + weight.scaled(sign_pow(j)).shifted(e).truncated(w);
                            }
                            return acc;
                        },
                        order);
                },
                order, guard);
            return first - second;
        },
        "", 0});

    // Andrews' constant: a = q collapses the split form to the constant 2.
    push_plain(HeckeDisplay{
        "S1-EQ-ANDREWS-CONST", "andrews 4.4", "alternating factorial sum telescopes to 2",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(ParamValue{-1, 1}, n, {1}, w)
                        .inverse()
                        .shifted(n * (n - 1) / 2);
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard&) {
            return QSeries::monomial(2, 0, order);
        }});

    // Base q^2 specializations of liuhr:eqn1 at a = q and a = -q.
    push_plain(HeckeDisplay{
        "S1-EQ-LIUHR-Q2A", "liuhr chain", "base q^2, a = q specialization",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(ParamValue{-1, 1}, n, {2}, w).inverse().shifted(n * (n - 1));
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            QSeries pre = infprod({kQ, ParamValue{-1, 2}}, {ParamValue{-1, 1}, kQ2}, {2}, order);
            return pre * hecke1(
                             [](std::int64_t n, std::int64_t w) {
                                 return QSeries::one(w) + QSeries::monomial(1, 2 * n, w) +
                                        QSeries::monomial(1, 4 * n + 1, w) +
                                        QSeries::monomial(1, 6 * n + 3, w);
                             },
                             InnerRange::Symmetric, quad(3, 0, -2, 0), hecke_sign::alt_nj, order,
                             guard);
        }});
    push_plain(HeckeDisplay{
        "S1-EQ-LIUHR-Q2B", "liuhr chain", "base q^2, a = -q specialization",
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            return sum1(
                [](std::int64_t n, std::int64_t w) {
                    return poch_finite(kQ, n, {2}, w).inverse().shifted(n * (n - 1));
                },
                order, guard);
        },
        [](const Assignment&, std::int64_t order, const SumGuard& guard) {
            QSeries pre = infprod({ParamValue{-1, 1}}, {kQ}, {1}, order);
            return pre * hecke1(
                             [](std::int64_t n, std::int64_t w) {
                                 return QSeries::one(w) + QSeries::monomial(1, 2 * n, w) -
                                        QSeries::monomial(1, 4 * n + 1, w) -
                                        QSeries::monomial(1, 6 * n + 3, w);
                             },
                             InnerRange::Symmetric, quad(3, 0, -2, 0), hecke_sign::alt_j, order,
                             guard);
        }});

    // The finite Hecke identity with the boundary index m.
    out.push_back(IdentityRecord{
        "S1-EQ-FINITEMOCK", "finitemock", "finite symmetric double sum against a damped partial theta",
        "s1", Family::Hecke,
        {index_slot("m", 0, 12)},
        {assign({{"m", {0, 0}}}), assign({{"m", {1, 0}}}), assign({{"m", {2, 0}}}),
         assign({{"m", {3, 0}}})},
        [](const Assignment& as, std::int64_t order, const SumGuard& guard) {
            const std::int64_t m = int_slot(as, "m");
            return sum1(
                [&](std::int64_t n, std::int64_t w) {
                    QSeries den = poch_finite(ParamValue{-1, 1}, n, {1}, w) * one_plus(m + n + 1, w);
                    return den.inverse().shifted(n * (n + 1) / 2);
                },
                order, guard);
        },
        [](const Assignment& as, std::int64_t order, const SumGuard&) {
            const std::int64_t m = int_slot(as, "m");
            return eval_sound(
                [&](std::int64_t w) {
                    QSeries qqm = poch_finite(kQ, m, {1}, w);
                    QSeries acc = QSeries::zero(w);
                    for (std::int64_t n = 0; n <= m; ++n) {
                        QSeries weight = one_minus(2 * n + 1, w) * qqm * qqm *
                                         (poch_finite(kQ, m - n, {1}, w) *
                                          poch_finite(kQ, m + n + 1, {1}, w))
                                             .inverse();
                        for (std::int64_t j = -n; j <= n; ++j)
                            acc = acc + weight.scaled(sign_pow(n + j))
                                            .shifted((3 * n * n + n) / 2 - j * j)
                                            .truncated(w);
                    }
                    return acc;
                },
                order);
        },
        "", 0});
}

}  // namespace qv::corpus_detail

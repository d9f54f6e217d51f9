#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aml/analysis.hpp"
#include "aml/catalog.hpp"
#include "aml/monoid.hpp"
#include "aml/parse.hpp"
#include "aml/random.hpp"
#include "aml/reduction.hpp"

namespace aml {

/// Outcome of one verification sweep item.
struct SweepItem {
    std::string name;
    bool pass;
    std::int64_t checked;
    std::string detail;
};

struct SweepConfig {
    std::int64_t max_param = 4;  // MAA/MMA quadruple entries in [0..max_param]
    std::int64_t max_q = 6;      // compatible quadruple entries in [1..max_q]
    std::int64_t iso_bound = 3;  // exhaustive MAA isomorphism bound
    std::int64_t g1_bound = 5;   // exhaustive |l|, |m| bound for G1
    int mutant_count = 100;
    std::uint64_t mutation_seed = 424243;
};

inline std::vector<Quadruple> all_quadruples(std::int64_t lo, std::int64_t hi) {
    std::vector<Quadruple> out;
    for (std::int64_t b = lo; b <= hi; ++b)
        for (std::int64_t bp = lo; bp <= hi; ++bp)
            for (std::int64_t c = lo; c <= hi; ++c)
                for (std::int64_t cp = lo; cp <= hi; ++cp) out.push_back({b, bp, c, cp});
    return out;
}

inline std::vector<Quadruple> compatible_quadruples(std::int64_t hi) {
    std::vector<Quadruple> out;
    for (const auto& p : all_quadruples(1, hi))
        if (is_compatible(p)) out.push_back(p);
    return out;
}

/// Every dimension-3 descriptor covered by the verification sweeps.
inline std::vector<MonoidDescriptor> sweep_descriptors(const SweepConfig& cfg) {
    std::vector<MonoidDescriptor> out = {simple_descriptor(Family::Add3),
                                         simple_descriptor(Family::U3),
                                         simple_descriptor(Family::Mul3)};
    for (const auto& p : all_quadruples(0, cfg.max_param)) {
        out.push_back(maa(p));
        out.push_back(mma(p));
    }
    for (const auto& p : compatible_quadruples(cfg.max_q)) out.push_back(maa_q(p));
    return out;
}

/// Criterion 1: every parameterized catalog monoid in the sweep satisfies the
/// associativity identity exactly and carries a verified two-sided unit.
inline SweepItem criterion_catalog_soundness(const SweepConfig& cfg) {
    std::int64_t checked = 0;
    for (const auto& d : sweep_descriptors(cfg)) {
        const PolynomialMonoid m = build_monoid(d);
        ++checked;
        if (!check_associativity(m).associative)
            return {"catalog-associativity-sweep", false, checked,
                    "associativity fails for " + to_text(d)};
        if (!m.unit() || !verify_unit(m, *m.unit()))
            return {"catalog-associativity-sweep", false, checked,
                    "unit verification fails for " + to_text(d)};
    }
    return {"catalog-associativity-sweep", true, checked, "all monoids exact"};
}

/// Criterion 2: the rank-1 example with quadruple (1,2,1,3) reproduces the
/// reference multiplication and its correction term exactly.
inline SweepItem criterion_reference_example() {
    const auto mono = [](Exponents e, int c) {
        return LaurentPolynomial::monomial(6, std::move(e), Rational(c));
    };
    // (u1*v1, u1*v2 + v1^2*u2, u1*v3 + v1^3*u3 + 2*v1*u2*v2), written out.
    const std::vector<LaurentPolynomial> expected = {
        mono({1, 0, 0, 1, 0, 0}, 1),
        mono({1, 0, 0, 0, 1, 0}, 1) + mono({0, 1, 0, 2, 0, 0}, 1),
        mono({1, 0, 0, 0, 0, 1}, 1) + mono({0, 0, 1, 3, 0, 0}, 1) +
            mono({0, 1, 0, 1, 1, 0}, 2),
    };
    const PolynomialMonoid m = build_monoid(maa_q({1, 2, 1, 3}));
    if (m.components() != expected)
        return {"reference-example", false, 1, "multiplication differs"};

    const std::string source = to_source_text(m);
    const std::string expected_source =
        "dim 3; mul = (u1*v1, u2*v1^2 + u1*v2, u3*v1^3 + 2*u2*v1*v2 + u1*v3); "
        "unit = (1, 0, 0)";
    if (source != expected_source)
        return {"reference-example", false, 1, "printed source differs: " + source};

    const LaurentPolynomial expected_q =
        LaurentPolynomial::monomial(4, {0, 1, 1, 1}, Rational(2));
    if (q_poly({1, 2, 1, 3}) != expected_q)
        return {"reference-example", false, 1, "correction polynomial differs"};
    return {"reference-example", true, 1, "exact match"};
}

/// Criterion 3: the summed form of Q_p equals its closed Laurent form for
/// every compatible quadruple in the sweep, and Q_{b,c} = Q_{(b,b,c,c)}.
inline SweepItem criterion_q_identities(const SweepConfig& cfg) {
    std::int64_t checked = 0;
    for (const auto& p : compatible_quadruples(cfg.max_q)) {
        const std::int64_t d = is_compatible(p)->d;
        // x1^c x2^c' ((y1/x1^b + y2/x2^b')^(d+1) - (y1/x1^b)^(d+1) - (y2/x2^b')^(d+1))
        const auto m1 = LaurentPolynomial::monomial(4, {-p.b, 0, 1, 0}, Rational(1));
        const auto m2 = LaurentPolynomial::monomial(4, {0, -p.bp, 0, 1}, Rational(1));
        const auto closed =
            LaurentPolynomial::monomial(4, {p.c, p.cp, 0, 0}, Rational(1)) *
            ((m1 + m2).pow(d + 1) - m1.pow(d + 1) - m2.pow(d + 1));
        ++checked;
        if (closed != q_poly(p))
            return {"q-polynomial-identities", false, checked,
                    "closed form differs for quadruple of " + to_text(maa_q(p))};
    }
    for (std::int64_t b = 1; b <= cfg.max_q; ++b)
        for (std::int64_t c = b; c <= cfg.max_q; ++c) {
            ++checked;
            if (q_bc(b, c) != q_poly({b, b, c, c}))
                return {"q-polynomial-identities", false, checked,
                        "commutative form differs for b=" + std::to_string(b) +
                            ", c=" + std::to_string(c)};
        }
    return {"q-polynomial-identities", true, checked, "all identities exact"};
}

/// Criterion 4: both commutative reductions of every semicommutative
/// descriptor are regular, commutative, associative, keep the original unit,
/// and identify to the predicted commutative catalog rows.
inline SweepItem criterion_reduction_targets(const SweepConfig& cfg) {
    std::int64_t checked = 0;
    const auto run = [&](const MonoidDescriptor& d, const MonoidDescriptor& left_target,
                         const MonoidDescriptor& right_target) -> std::string {
        const PolynomialMonoid m = build_monoid(d);
        for (const Side side : {Side::Left, Side::Right}) {
            const ReductionResult r = commutative_reduction(d, side);
            if (!check_commutativity(r.reduced)) return "reduction not commutative";
            if (!check_associativity(r.reduced).associative)
                return "reduction not associative";
            if (!r.reduced.unit() || *r.reduced.unit() != *m.unit())
                return "reduction lost the unit";
            const MonoidDescriptor want =
                canonical_form(side == Side::Left ? left_target : right_target);
            if (r.identified != want)
                return "identified " + to_text(r.identified) + ", expected " +
                       to_text(want);
        }
        return "";
    };
    for (const auto& p : all_quadruples(0, cfg.max_param)) {
        ++checked;
        if (auto msg = run(maa(p), maa({p.b, p.b, p.c, p.c}),
                           maa({p.bp, p.bp, p.cp, p.cp}));
            !msg.empty())
            return {"reduction-targets", false, checked, to_text(maa(p)) + ": " + msg};
        ++checked;
        if (auto msg = run(mma(p), mma({p.b, p.b, p.c, p.c}),
                           mma({p.bp, p.bp, p.cp, p.cp}));
            !msg.empty())
            return {"reduction-targets", false, checked, to_text(mma(p)) + ": " + msg};
    }
    for (const auto& p : compatible_quadruples(cfg.max_q)) {
        ++checked;
        if (auto msg = run(maa_q(p), maa_q({p.b, p.b, p.c, p.c}),
                           maa_q({p.bp, p.bp, p.cp, p.cp}));
            !msg.empty())
            return {"reduction-targets", false, checked, to_text(maa_q(p)) + ": " + msg};
    }
    return {"reduction-targets", true, checked, "all reductions identified"};
}

/// Criterion 5: idempotent components verify exactly, the grid scan finds no
/// unlisted idempotent, and the component count equals 2^rank.
inline SweepItem criterion_idempotent_tables(const SweepConfig& cfg) {
    std::int64_t checked = 0;
    for (const auto& d : sweep_descriptors(cfg)) {
        const PolynomialMonoid m = build_monoid(d);
        const auto comps = idempotent_components(d);
        ++checked;
        for (const auto& comp : comps)
            if (!verify_component(m, comp, PointPredicate::Idempotent))
                return {"idempotent-tables", false, checked,
                        to_text(d) + ": component " + comp.label + " fails"};
        if (!grid_maximality_scan(m, comps, PointPredicate::Idempotent))
            return {"idempotent-tables", false, checked,
                    to_text(d) + ": unlisted idempotent in grid"};
        const auto counts = component_count_vs_rank(d);
        if (!counts.equal_2r)
            return {"idempotent-tables", false, checked,
                    to_text(d) + ": " + std::to_string(counts.count) +
                        " components, rank " + std::to_string(counts.rank)};
    }
    return {"idempotent-tables", true, checked, "all components verified"};
}

/// Criterion 6: center components verify exactly, the grid scan finds no
/// unlisted central point, the rank-1 noncommutative count matches
/// gcd(|b-b'|, |c-c'|) + 1, and the reference center is the expected pair.
inline SweepItem criterion_center_tables(const SweepConfig& cfg) {
    std::int64_t checked = 0;
    for (const auto& d : sweep_descriptors(cfg)) {
        const PolynomialMonoid m = build_monoid(d);
        const auto comps = center_components(d);
        ++checked;
        for (const auto& comp : comps)
            if (!verify_component(m, comp, PointPredicate::Central))
                return {"center-tables", false, checked,
                        to_text(d) + ": component " + comp.label + " fails"};
        if (!grid_maximality_scan(m, comps, PointPredicate::Central))
            return {"center-tables", false, checked,
                    to_text(d) + ": unlisted central point in grid"};
        if ((d.family == Family::MAA || d.family == Family::MAAQ) &&
            !is_commutative_descriptor(d)) {
            // gcd(|b-b'|, |c-c'|) + 1 whenever the zero branch is central;
            // one less on the boundary where a differing exponent pair has
            // exactly one zero, which removes the zero branch.
            const bool with_zero =
                z_count(d.p.b, d.p.bp) != 1 && z_count(d.p.c, d.p.cp) != 1;
            const std::int64_t expected =
                std::gcd(d.p.b - d.p.bp, d.p.c - d.p.cp) + (with_zero ? 1 : 0);
            if (center_component_count_rank1(d) != expected)
                return {"center-tables", false, checked,
                        to_text(d) + ": component count differs from gcd formula"};
        }
    }
    // The center of the (1,2,1,3) rank-1 monoid is exactly two points.
    const auto comps = center_components(maa({1, 2, 1, 3}));
    std::set<Point> points;
    for (const auto& comp : comps) {
        const auto pts = component_rational_points(comp);
        if (!pts)
            return {"center-tables", false, checked, "reference center not finite"};
        points.insert(pts->begin(), pts->end());
    }
    const std::set<Point> expected = {{Rational(0), Rational(0), Rational(0)},
                                      {Rational(1), Rational(0), Rational(0)}};
    if (points != expected)
        return {"center-tables", false, checked, "reference center differs"};
    return {"center-tables", true, checked, "all components verified"};
}

/// Criterion 7: exhaustive isomorphism decisions for small parameters.
inline SweepItem criterion_isomorphism_decisions(const SweepConfig& cfg) {
    std::int64_t checked = 0;
    const auto quads = all_quadruples(0, cfg.iso_bound);
    for (const auto& p : quads)
        for (const auto& q : quads) {
            const bool expected = p == q || p == symmetric(q);
            ++checked;
            if ((are_isomorphic(maa(p), maa(q)) == Iso::Yes) != expected)
                return {"isomorphism-decisions", false, checked,
                        "MAA pair " + to_text(maa(p)) + " vs " + to_text(maa(q))};
        }
    if (are_isomorphic(maa({1, 1, 2, 2}), maa({1, 2, 2, 1})) != Iso::No)
        return {"isomorphism-decisions", false, checked,
                "commutative/noncommutative pair must differ"};

    // Independent oracle for the G1 relation: close {(l,m)} under the swap
    // and simultaneous-negation moves, then compare membership.
    const auto orbit_of = [](std::int64_t l, std::int64_t m) {
        std::set<std::pair<std::int64_t, std::int64_t>> orbit{{l, m}};
        bool grew = true;
        while (grew) {
            grew = false;
            auto snapshot = orbit;
            for (const auto& [a, b] : snapshot) {
                grew |= orbit.insert({b, a}).second;
                grew |= orbit.insert({-a, -b}).second;
            }
        }
        return orbit;
    };
    for (std::int64_t l1 = -cfg.g1_bound; l1 <= cfg.g1_bound; ++l1)
        for (std::int64_t m1 = -cfg.g1_bound; m1 <= cfg.g1_bound; ++m1) {
            const auto orbit = orbit_of(l1, m1);
            for (std::int64_t l2 = -cfg.g1_bound; l2 <= cfg.g1_bound; ++l2)
                for (std::int64_t m2 = -cfg.g1_bound; m2 <= cfg.g1_bound; ++m2) {
                    ++checked;
                    if (g1_isomorphic(l1, m1, l2, m2) != orbit.contains({l2, m2}))
                        return {"isomorphism-decisions", false, checked,
                                "G1 orbit mismatch"};
                }
        }
    return {"isomorphism-decisions", true, checked, "all decisions match"};
}

/// One seeded single-coefficient mutant of a catalog monoid.
inline PolynomialMonoid mutate_monoid(const MonoidDescriptor& d, SplitMix64& rng) {
    const PolynomialMonoid m = build_monoid(d);
    std::vector<LaurentPolynomial> comps = m.components();
    const std::size_t ci =
        static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(comps.size()) - 1));
    const auto& terms = comps[ci].terms();
    const std::size_t ti =
        static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(terms.size()) - 1));
    auto it = terms.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(ti));
    std::int64_t delta = 0;
    while (delta == 0) delta = rng.range(-3, 3);
    comps[ci] += LaurentPolynomial::monomial(comps[ci].arity(), it->first,
                                             Rational(delta));
    return PolynomialMonoid(std::move(comps));
}

/// Criterion 8: the sampler never contradicts the exact checker, and it
/// detects at least 99% of the exactly-non-associative mutants within 200
/// trials.
inline SweepItem criterion_mutation_detection(const SweepConfig& cfg) {
    const std::vector<MonoidDescriptor> pool = {
        simple_descriptor(Family::Add3), simple_descriptor(Family::U3),
        simple_descriptor(Family::Mul3), maa({1, 2, 1, 3}),
        maa({0, 1, 2, 3}),               maa({2, 2, 1, 1}),
        mma({1, 0, 2, 3}),               mma({0, 0, 0, 0}),
        mma({1, 1, 2, 2}),               maa_q({1, 2, 1, 3}),
        maa_q({2, 2, 3, 3}),             maa_q({1, 1, 2, 2}),
    };
    SplitMix64 rng(cfg.mutation_seed);
    std::int64_t non_associative = 0, detected = 0;
    for (int i = 0; i < cfg.mutant_count; ++i) {
        const auto& d = pool[static_cast<std::size_t>(
            rng.range(0, static_cast<std::int64_t>(pool.size()) - 1))];
        const PolynomialMonoid mutant = mutate_monoid(d, rng);
        const bool exact = check_associativity(mutant).associative;
        const SampleResult sampled = sample_associativity(mutant, 200, rng.next());
        if (!sampled.associative && exact)
            return {"mutation-detection", false, i + 1,
                    "sampler counterexample not confirmed by the exact checker"};
        if (!exact) {
            ++non_associative;
            if (!sampled.associative) ++detected;
        }
    }
    const bool rate_ok = detected * 100 >= non_associative * 99;
    return {"mutation-detection", rate_ok && non_associative > 0, cfg.mutant_count,
            std::to_string(non_associative) + " non-associative mutants, " +
                std::to_string(detected) + " detected by sampling"};
}

inline std::vector<SweepItem> run_acceptance_sweep(const SweepConfig& cfg = {}) {
    return {
        criterion_catalog_soundness(cfg), criterion_reference_example(),
        criterion_q_identities(cfg),      criterion_reduction_targets(cfg),
        criterion_idempotent_tables(cfg), criterion_center_tables(cfg),
        criterion_isomorphism_decisions(cfg), criterion_mutation_detection(cfg),
    };
}

}  // namespace aml

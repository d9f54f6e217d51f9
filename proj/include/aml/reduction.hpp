#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aml/catalog.hpp"
#include "aml/errors.hpp"
#include "aml/laurent.hpp"
#include "aml/monoid.hpp"

namespace aml {

/// Applies the multiplication map to two symbolic points given as vectors of
/// Laurent polynomials over a common ring.
inline std::vector<LaurentPolynomial> apply_multiplication(
    const PolynomialMonoid& m, const std::vector<LaurentPolynomial>& a,
    const std::vector<LaurentPolynomial>& b) {
    const std::size_t n = m.dimension();
    if (a.size() != n || b.size() != n)
        throw arity_error("symbolic point length differs from monoid dimension");
    std::vector<LaurentPolynomial> args = a;
    args.insert(args.end(), b.begin(), b.end());
    std::vector<LaurentPolynomial> out;
    out.reserve(n);
    for (const auto& c : m.components()) out.push_back(c.substitute(args));
    return out;
}

/// Closed-form decomposition g = t * u = v * t of a generic invertible
/// element g = (x, y, z), as Laurent monomial maps in the coordinates of g.
struct UnitDecomposition {
    std::vector<LaurentPolynomial> t;  // torus part
    std::vector<LaurentPolynomial> u;  // right unipotent part
    std::vector<LaurentPolynomial> v;  // left unipotent part
};

inline UnitDecomposition decompose_unit(const MonoidDescriptor& d) {
    validate(d);
    using LP = LaurentPolynomial;
    const auto mono3 = [](Exponents e) {
        return LP::monomial(3, std::move(e), Rational(1));
    };
    const LP zero(3);
    const LP one = LP::constant(3, Rational(1));
    UnitDecomposition dec;
    switch (d.family) {
        case Family::MAA:
        case Family::MAAQ:
            // t = (x,0,0), u = (1, x^-b y, x^-c z), v = (1, x^-b' y, x^-c' z)
            dec.t = {mono3({1, 0, 0}), zero, zero};
            dec.u = {one, mono3({-d.p.b, 1, 0}), mono3({-d.p.c, 0, 1})};
            dec.v = {one, mono3({-d.p.bp, 1, 0}), mono3({-d.p.cp, 0, 1})};
            return dec;
        case Family::MMA:
            // t = (x,y,0), u = (1, 1, x^-b y^-c z), v = (1, 1, x^-b' y^-c' z)
            dec.t = {mono3({1, 0, 0}), mono3({0, 1, 0}), zero};
            dec.u = {one, one, mono3({-d.p.b, -d.p.c, 1})};
            dec.v = {one, one, mono3({-d.p.bp, -d.p.cp, 1})};
            return dec;
        default:
            throw domain_error(
                "unit decompositions cover the semicommutative families only");
    }
}

/// Tries to recognize a multiplication map as a literal catalog row (after
/// parameter extraction) and confirms the guess by exact rebuild-and-compare.
/// Coordinate-permuted presentations are not recognized.
inline std::optional<MonoidDescriptor> match_catalog(const PolynomialMonoid& m) {
    const std::size_t n = m.dimension();
    std::vector<MonoidDescriptor> candidates;
    switch (n) {
        case 1:
            candidates = {simple_descriptor(Family::A1Add),
                          simple_descriptor(Family::A1Mul)};
            break;
        case 2: {
            candidates = {simple_descriptor(Family::A2Add),
                          simple_descriptor(Family::A2Torus)};
            // (u1*v1, u1^a*v2 + v1^b*u2): read a off the v2 term, b off the u2 term.
            const auto& c2 = m.components()[1];
            std::optional<std::int64_t> a, b;
            for (const auto& [e, coeff] : c2.terms()) {
                if (e[3] == 1 && e[1] == 0) a = e[0];
                if (e[1] == 1 && e[3] == 0) b = e[2];
            }
            if (a && b && *a >= 0 && *b >= 0)
                candidates.push_back(a2_semidirect(*a, *b));
            break;
        }
        case 3: {
            candidates = {simple_descriptor(Family::Add3),
                          simple_descriptor(Family::U3),
                          simple_descriptor(Family::Mul3)};
            // Rank-1 rows: b, c from the v2/v3 terms, b', c' from the u2/u3 terms.
            const auto& c2 = m.components()[1];
            const auto& c3 = m.components()[2];
            std::optional<std::int64_t> b, bp, c, cp;
            for (const auto& [e, coeff] : c2.terms()) {
                if (e[4] == 1 && e[1] == 0) b = e[0];
                if (e[1] == 1 && e[4] == 0) bp = e[3];
            }
            for (const auto& [e, coeff] : c3.terms()) {
                if (e[5] == 1 && e[2] == 0) c = e[0];
                if (e[2] == 1 && e[5] == 0) cp = e[3];
            }
            if (b && bp && c && cp && *b >= 0 && *bp >= 0 && *c >= 0 && *cp >= 0) {
                const Quadruple p{*b, *bp, *c, *cp};
                candidates.push_back(maa(p));
                if (p.b > 0 && p.bp > 0 && p.c > 0 && p.cp > 0 && is_compatible(p))
                    candidates.push_back(maa_q(p));
            }
            // Rank-2 row: b, c from the v3 term, b', c' from the u3 term.
            std::optional<Quadruple> q;
            for (const auto& [e, coeff] : c3.terms()) {
                if (e[5] == 1 && e[2] == 0) {
                    if (!q) q = Quadruple{};
                    q->b = e[0];
                    q->c = e[1];
                }
                if (e[2] == 1 && e[5] == 0) {
                    if (!q) q = Quadruple{};
                    q->bp = e[3];
                    q->cp = e[4];
                }
            }
            if (q && q->b >= 0 && q->bp >= 0 && q->c >= 0 && q->cp >= 0)
                candidates.push_back(mma(*q));
            break;
        }
        default: return std::nullopt;
    }
    for (const auto& cand : candidates) {
        const PolynomialMonoid built = build_monoid(cand);
        if (built.components() == m.components()) return cand;
    }
    return std::nullopt;
}

/// Identifies a commutative multiplication map in the commutative catalog,
/// returning the canonical descriptor; none for non-catalog presentations.
inline std::optional<MonoidDescriptor> identify_commutative(const PolynomialMonoid& m) {
    if (!check_commutativity(m)) return std::nullopt;
    const auto d = match_catalog(m);
    if (!d) return std::nullopt;
    return canonical_form(*d);
}

enum class Side { Left, Right };

inline std::string to_string(Side s) { return s == Side::Left ? "left" : "right"; }

/// A commutative reduction together with its identification in the
/// commutative catalog.
struct ReductionResult {
    PolynomialMonoid reduced;
    MonoidDescriptor identified;
    Side side;
};

namespace detail {

/// Re-reads an arity-3 symbolic map in the 6-variable product ring, placing
/// its coordinates at variable offset `base`.
inline std::vector<LaurentPolynomial> lift_to_pair_ring(
    const std::vector<LaurentPolynomial>& map, std::size_t base) {
    std::vector<LaurentPolynomial> vars;
    for (std::size_t i = 0; i < 3; ++i)
        vars.push_back(LaurentPolynomial::variable(6, base + i));
    std::vector<LaurentPolynomial> out;
    out.reserve(map.size());
    for (const auto& f : map) out.push_back(f.substitute(vars));
    return out;
}

}  // namespace detail

/// Computes one commutative reduction of a semicommutative catalog monoid by
/// exact symbolic composition: the left reduction sends (g, w) to t*w*u and
/// the right reduction sends (w, g) to v*w*t, where g = t*u = v*t runs over
/// the generic invertible elements.
inline ReductionResult commutative_reduction(const MonoidDescriptor& d, Side side) {
    const PolynomialMonoid m = build_monoid(d);
    const UnitDecomposition dec = decompose_unit(d);

    std::vector<LaurentPolynomial> composed;
    if (side == Side::Left) {
        // g is the first argument: coordinates (u1,u2,u3) of the pair ring.
        const auto t = detail::lift_to_pair_ring(dec.t, 0);
        const auto u = detail::lift_to_pair_ring(dec.u, 0);
        std::vector<LaurentPolynomial> w;
        for (std::size_t i = 0; i < 3; ++i)
            w.push_back(LaurentPolynomial::variable(6, 3 + i));
        composed = apply_multiplication(m, apply_multiplication(m, t, w), u);
    } else {
        // g is the second argument: coordinates (v1,v2,v3) of the pair ring.
        const auto t = detail::lift_to_pair_ring(dec.t, 3);
        const auto v = detail::lift_to_pair_ring(dec.v, 3);
        std::vector<LaurentPolynomial> w;
        for (std::size_t i = 0; i < 3; ++i)
            w.push_back(LaurentPolynomial::variable(6, i));
        composed = apply_multiplication(m, apply_multiplication(m, v, w), t);
    }

    for (const auto& c : composed)
        if (!c.is_regular())
            throw error("internal: commutative reduction produced a non-regular map");

    PolynomialMonoid reduced(std::move(composed));
    if (m.unit()) reduced.attach_unit(*m.unit());

    const auto identified = identify_commutative(reduced);
    if (!identified)
        throw error("internal: reduced multiplication not found in the catalog");
    return {std::move(reduced), *identified, side};
}

inline ReductionResult left_reduction(const MonoidDescriptor& d) {
    return commutative_reduction(d, Side::Left);
}

inline ReductionResult right_reduction(const MonoidDescriptor& d) {
    return commutative_reduction(d, Side::Right);
}

}  // namespace aml

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aml/catalog.hpp"
#include "aml/errors.hpp"
#include "aml/laurent.hpp"
#include "aml/monoid.hpp"

namespace aml {

/// Number of zeros among two integers; selects the branch of the idempotent
/// component table.
inline int z_count(std::int64_t a, std::int64_t b) {
    return static_cast<int>(a == 0) + static_cast<int>(b == 0);
}

/// Description of one coordinate of a parameterized variety component.
struct CoordSpec {
    enum class Kind { Fixed, Free, RootsOfUnity };
    Kind kind = Kind::Free;
    Rational value;          // Fixed only
    std::int64_t order = 0;  // RootsOfUnity: x^order = 1, or x = 0 when allowed
    bool includes_zero = true;

    static CoordSpec fixed(Rational v) { return {Kind::Fixed, std::move(v), 0, true}; }
    static CoordSpec free() { return {Kind::Free, Rational(0), 0, true}; }
    /// Models Phi_a = {0} union {a-th roots of unity} when with_zero, and the
    /// bare root-of-unity group otherwise; the zero value is a separate
    /// branch of the same coordinate spec.
    static CoordSpec roots_of_unity(std::int64_t a, bool with_zero = true) {
        if (a < 1) throw domain_error("root-of-unity order must be >= 1");
        return {Kind::RootsOfUnity, Rational(0), a, with_zero};
    }
};

/// One component of an idempotent or center variety: a coordinate pattern,
/// optionally cut by one implicit binomial relation between the coordinates
/// (used for the rank-2 center, which is not parameterized).
struct VarietyComponent {
    std::vector<CoordSpec> coords;
    std::optional<std::pair<Exponents, Exponents>> binomial;
    int dim = 0;
    std::string label;
};

namespace detail {

inline std::string coord_letter(std::size_t i) {
    static const char* letters[] = {"x", "y", "z"};
    return i < 3 ? letters[i] : "x" + std::to_string(i + 1);
}

inline std::string component_label(const VarietyComponent& comp) {
    std::string inner;
    for (std::size_t i = 0; i < comp.coords.size(); ++i) {
        if (i) inner += ", ";
        switch (comp.coords[i].kind) {
            case CoordSpec::Kind::Fixed: inner += to_string(comp.coords[i].value); break;
            case CoordSpec::Kind::Free: inner += coord_letter(i); break;
            case CoordSpec::Kind::RootsOfUnity:
                inner += coord_letter(i);
                break;
        }
    }
    std::string out = "(" + inner + ")";
    for (std::size_t i = 0; i < comp.coords.size(); ++i)
        if (comp.coords[i].kind == CoordSpec::Kind::RootsOfUnity) {
            if (comp.coords[i].includes_zero)
                out += ", " + coord_letter(i) + " in Phi_" +
                       std::to_string(comp.coords[i].order);
            else
                out += ", " + coord_letter(i) + "^" +
                       std::to_string(comp.coords[i].order) + " = 1";
        }
    if (comp.binomial) {
        const auto render = [&](const Exponents& e) {
            std::string s;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!s.empty()) s += "*";
                s += coord_letter(i);
                if (e[i] != 1) s += "^" + std::to_string(e[i]);
            }
            return s.empty() ? std::string("1") : s;
        };
        out += ", " + render(comp.binomial->first) + " = " + render(comp.binomial->second);
    }
    return out;
}

inline VarietyComponent make_component(std::vector<CoordSpec> coords,
                                       std::optional<std::pair<Exponents, Exponents>>
                                           binomial = std::nullopt) {
    VarietyComponent comp{std::move(coords), std::move(binomial), 0, ""};
    int freedom = 0;
    for (const auto& c : comp.coords)
        if (c.kind == CoordSpec::Kind::Free) ++freedom;
    comp.dim = freedom - (comp.binomial ? 1 : 0);
    comp.label = component_label(comp);
    return comp;
}

inline VarietyComponent point_component(std::initializer_list<int> values) {
    std::vector<CoordSpec> coords;
    for (int v : values) coords.push_back(CoordSpec::fixed(Rational(v)));
    return make_component(std::move(coords));
}

}  // namespace detail

/// The irreducible components of the idempotent variety of a dimension-3
/// catalog monoid, by literal case analysis on z(b,b') and z(c,c').
inline std::vector<VarietyComponent> idempotent_components(const MonoidDescriptor& d) {
    if (dimension(d) != 3)
        throw domain_error("idempotent table covers dimension-3 monoids only");
    validate(d);
    using detail::make_component;
    using detail::point_component;
    const auto F = CoordSpec::free;
    const auto X = [](int v) { return CoordSpec::fixed(Rational(v)); };

    switch (d.family) {
        case Family::Add3:
        case Family::U3: return {point_component({0, 0, 0})};
        case Family::Mul3: {
            std::vector<VarietyComponent> out;
            for (int x = 0; x <= 1; ++x)
                for (int y = 0; y <= 1; ++y)
                    for (int z = 0; z <= 1; ++z) out.push_back(point_component({x, y, z}));
            return out;
        }
        case Family::MAA: {
            const int zb = z_count(d.p.b, d.p.bp);
            const int zc = z_count(d.p.c, d.p.cp);
            std::vector<VarietyComponent> out = {point_component({1, 0, 0})};
            if (zb == 1 && zc == 1)
                out.push_back(make_component({X(0), F(), F()}));
            else if (zb != 1 && zc == 1)
                out.push_back(make_component({X(0), X(0), F()}));
            else if (zb == 1 && zc != 1)
                out.push_back(make_component({X(0), F(), X(0)}));
            else
                out.push_back(point_component({0, 0, 0}));
            return out;
        }
        case Family::MAAQ:
            return {point_component({1, 0, 0}), point_component({0, 0, 0})};
        case Family::MMA: {
            std::vector<VarietyComponent> out = {point_component({1, 1, 0})};
            if (z_count(d.p.b, d.p.bp) == 1)
                out.push_back(make_component({X(0), X(1), F()}));
            else
                out.push_back(point_component({0, 1, 0}));
            if (z_count(d.p.c, d.p.cp) == 1)
                out.push_back(make_component({X(1), X(0), F()}));
            else
                out.push_back(point_component({1, 0, 0}));
            // The z-axis component is positive-dimensional exactly when one of
            // the exponent pairs (b,c), (b',c') vanishes and the other does not.
            const bool left_zero = d.p.b == 0 && d.p.c == 0;
            const bool right_zero = d.p.bp == 0 && d.p.cp == 0;
            if (left_zero != right_zero)
                out.push_back(make_component({X(0), X(0), F()}));
            else
                out.push_back(point_component({0, 0, 0}));
            return out;
        }
        default: throw domain_error("unknown family");
    }
}

/// The components of the center of a dimension-3 catalog monoid. A single
/// root-of-unity coordinate spec bundles the finite monoid Phi_a; the rank-2
/// noncommutative center is returned as an implicit binomial component.
inline std::vector<VarietyComponent> center_components(const MonoidDescriptor& d) {
    if (dimension(d) != 3)
        throw domain_error("center table covers dimension-3 monoids only");
    validate(d);
    using detail::make_component;
    const auto F = CoordSpec::free;
    const auto X = [](int v) { return CoordSpec::fixed(Rational(v)); };
    const auto Phi = [](std::int64_t a, bool with_zero = true) {
        return CoordSpec::roots_of_unity(a, with_zero);
    };
    const auto whole_space = [&] { return make_component({F(), F(), F()}); };

    switch (d.family) {
        case Family::Add3:
        case Family::Mul3: return {whole_space()};
        case Family::U3: return {make_component({X(0), X(0), F()})};
        case Family::MAA: {
            const bool eb = d.p.b == d.p.bp;
            const bool ec = d.p.c == d.p.cp;
            if (eb && ec) return {whole_space()};
            // A zero first coordinate is central only when neither differing
            // exponent pair has exactly one zero entry: 0^k distinguishes
            // k = 0 from k > 0.
            const bool with_zero =
                z_count(d.p.b, d.p.bp) != 1 && z_count(d.p.c, d.p.cp) != 1;
            if (!eb && ec)
                return {make_component(
                    {Phi(std::llabs(d.p.bp - d.p.b), with_zero), X(0), F()})};
            if (eb && !ec)
                return {make_component(
                    {Phi(std::llabs(d.p.cp - d.p.c), with_zero), F(), X(0)})};
            return {make_component(
                {Phi(std::gcd(d.p.bp - d.p.b, d.p.cp - d.p.c), with_zero), X(0),
                 X(0)})};
        }
        case Family::MAAQ: {
            if (d.p.b == d.p.bp) return {whole_space()};
            // Compatible quadruples are strictly positive, so the zero branch
            // is always central here.
            return {make_component({Phi(std::llabs(d.p.bp - d.p.b)), X(0), X(0)})};
        }
        case Family::MMA: {
            if (d.p.b == d.p.bp && d.p.c == d.p.cp) return {whole_space()};
            return {make_component(
                {F(), F(), X(0)},
                std::pair<Exponents, Exponents>{{d.p.b, d.p.c, 0}, {d.p.bp, d.p.cp, 0}})};
        }
        default: throw domain_error("unknown family");
    }
}

enum class PointPredicate { Idempotent, Central };

namespace detail {

/// Normal form modulo w^a = 1: every exponent of variable `var` is reduced
/// into [0, a). Sound because w^a - 1 has a distinct roots, so vanishing in
/// the quotient is vanishing at every a-th root of unity simultaneously.
inline LaurentPolynomial reduce_root_of_unity(const LaurentPolynomial& f,
                                              std::size_t var, std::int64_t a) {
    LaurentPolynomial out(f.arity());
    for (const auto& [e, c] : f.terms()) {
        Exponents e2 = e;
        e2[var] = ((e2[var] % a) + a) % a;
        out += LaurentPolynomial::monomial(f.arity(), std::move(e2), c);
    }
    return out;
}

/// Normal form modulo the binomial X^lhs - X^rhs, rewriting the graded-lex
/// larger monomial to the smaller one. A single binomial is a Groebner basis
/// of the principal ideal it generates, so the normal form is zero exactly
/// for members of the ideal.
inline LaurentPolynomial reduce_binomial(LaurentPolynomial f, Exponents lhs,
                                         Exponents rhs) {
    if (GradedLexLess{}(lhs, rhs)) std::swap(lhs, rhs);
    const std::size_t arity = f.arity();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [e, c] : f.terms()) {
            bool divisible = true;
            for (std::size_t i = 0; i < arity; ++i)
                if (e[i] < lhs[i]) { divisible = false; break; }
            if (!divisible) continue;
            Exponents e2 = e;
            for (std::size_t i = 0; i < arity; ++i) e2[i] += rhs[i] - lhs[i];
            const Rational coeff = c;
            f -= LaurentPolynomial::monomial(arity, e, coeff);
            f += LaurentPolynomial::monomial(arity, std::move(e2), coeff);
            changed = true;
            break;
        }
    }
    return f;
}

/// Lifts an n-coordinate exponent pattern into an ambient ring where the
/// coordinates occupy the first n variables.
inline Exponents lift_exponents(const Exponents& e, std::size_t ambient) {
    Exponents out(ambient, 0);
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i];
    return out;
}

}  // namespace detail

/// Verifies that the predicate polynomial vanishes identically on the whole
/// component: free coordinates become fresh variables, a Phi_a coordinate is
/// checked both in the quotient ring modulo w^a = 1 and on its zero branch,
/// and an implicit binomial component is checked modulo the relation.
inline bool verify_component(const PolynomialMonoid& m, const VarietyComponent& comp,
                             PointPredicate predicate) {
    const std::size_t n = m.dimension();
    if (comp.coords.size() != n)
        throw arity_error("component dimension differs from monoid dimension");

    std::vector<std::size_t> root_coords;
    std::vector<std::size_t> zero_branchable;
    for (std::size_t i = 0; i < n; ++i)
        if (comp.coords[i].kind == CoordSpec::Kind::RootsOfUnity) {
            root_coords.push_back(i);
            if (comp.coords[i].includes_zero) zero_branchable.push_back(i);
        }

    const std::size_t ambient = predicate == PointPredicate::Central ? 2 * n : n;

    for (std::uint64_t branch = 0;
         branch < (std::uint64_t{1} << zero_branchable.size()); ++branch) {
        std::vector<bool> zero_branch(n, false);
        for (std::size_t k = 0; k < zero_branchable.size(); ++k)
            if ((branch >> k) & 1) zero_branch[zero_branchable[k]] = true;

        // Symbolic point on the component for this branch.
        std::vector<LaurentPolynomial> e;
        e.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            switch (comp.coords[i].kind) {
                case CoordSpec::Kind::Fixed:
                    e.push_back(LaurentPolynomial::constant(ambient, comp.coords[i].value));
                    break;
                case CoordSpec::Kind::Free:
                    e.push_back(LaurentPolynomial::variable(ambient, i));
                    break;
                case CoordSpec::Kind::RootsOfUnity:
                    e.push_back(zero_branch[i]
                                    ? LaurentPolynomial::constant(ambient, Rational(0))
                                    : LaurentPolynomial::variable(ambient, i));
                    break;
            }
        }

        std::vector<LaurentPolynomial> defect;
        if (predicate == PointPredicate::Idempotent) {
            std::vector<LaurentPolynomial> args = e;
            args.insert(args.end(), e.begin(), e.end());
            for (std::size_t i = 0; i < n; ++i)
                defect.push_back(m.components()[i].substitute(args) - e[i]);
        } else {
            std::vector<LaurentPolynomial> generic;
            for (std::size_t i = 0; i < n; ++i)
                generic.push_back(LaurentPolynomial::variable(ambient, n + i));
            std::vector<LaurentPolynomial> left = e, right = generic;
            left.insert(left.end(), generic.begin(), generic.end());
            right.insert(right.end(), e.begin(), e.end());
            for (std::size_t i = 0; i < n; ++i)
                defect.push_back(m.components()[i].substitute(left) -
                                 m.components()[i].substitute(right));
        }

        for (auto& f : defect) {
            for (std::size_t i : root_coords)
                if (!zero_branch[i])
                    f = detail::reduce_root_of_unity(f, i, comp.coords[i].order);
            if (comp.binomial)
                f = detail::reduce_binomial(
                    f, detail::lift_exponents(comp.binomial->first, ambient),
                    detail::lift_exponents(comp.binomial->second, ambient));
            if (!f.is_zero()) return false;
        }
    }
    return true;
}

/// Exact point-level predicate used by the grid scan.
inline bool point_satisfies(const PolynomialMonoid& m, const Point& g,
                            PointPredicate predicate) {
    const std::size_t n = m.dimension();
    if (predicate == PointPredicate::Idempotent)
        return multiply_points(m, g, g) == g;
    std::vector<LaurentPolynomial> consts, vars;
    for (std::size_t i = 0; i < n; ++i) {
        consts.push_back(LaurentPolynomial::constant(n, g[i]));
        vars.push_back(LaurentPolynomial::variable(n, i));
    }
    std::vector<LaurentPolynomial> left = consts, right = vars;
    left.insert(left.end(), vars.begin(), vars.end());
    right.insert(right.end(), consts.begin(), consts.end());
    for (const auto& c : m.components())
        if (c.substitute(left) != c.substitute(right)) return false;
    return true;
}

/// Exact membership of a rational point in a component.
inline bool component_contains(const VarietyComponent& comp, const Point& g) {
    for (std::size_t i = 0; i < comp.coords.size(); ++i) {
        switch (comp.coords[i].kind) {
            case CoordSpec::Kind::Fixed:
                if (g[i] != comp.coords[i].value) return false;
                break;
            case CoordSpec::Kind::Free: break;
            case CoordSpec::Kind::RootsOfUnity:
                if (g[i] == 0) {
                    if (!comp.coords[i].includes_zero) return false;
                } else if (rational_pow(g[i], comp.coords[i].order) != 1) {
                    return false;
                }
                break;
        }
    }
    if (comp.binomial) {
        Rational lhs(1), rhs(1);
        for (std::size_t i = 0; i < comp.coords.size(); ++i) {
            if (comp.binomial->first[i] != 0)
                lhs *= rational_pow(g[i], comp.binomial->first[i]);
            if (comp.binomial->second[i] != 0)
                rhs *= rational_pow(g[i], comp.binomial->second[i]);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

/// Default scan grid {-2,-1,0,1,2}; it contains every root of unity
/// realizable over the rationals.
inline std::vector<Rational> default_grid() {
    return {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
}

/// Sound partial converse of the component tables: every grid point that
/// satisfies the predicate exactly must lie on some listed component.
inline bool grid_maximality_scan(const PolynomialMonoid& m,
                                 const std::vector<VarietyComponent>& comps,
                                 PointPredicate predicate,
                                 const std::vector<Rational>& grid = default_grid()) {
    const std::size_t n = m.dimension();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Point g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = grid[idx[i]];
        if (point_satisfies(m, g, predicate)) {
            bool listed = false;
            for (const auto& comp : comps)
                if (component_contains(comp, g)) { listed = true; break; }
            if (!listed) return false;
        }
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < grid.size()) break;
            idx[i] = 0;
        }
        if (i == n) break;
    }
    return true;
}

/// Number of irreducible components after expanding each root-of-unity
/// coordinate into its a members plus, when present, the zero branch.
inline std::int64_t expanded_component_count(const std::vector<VarietyComponent>& comps) {
    std::int64_t total = 0;
    for (const auto& comp : comps) {
        std::int64_t factor = 1;
        for (const auto& c : comp.coords)
            if (c.kind == CoordSpec::Kind::RootsOfUnity)
                factor *= c.order + (c.includes_zero ? 1 : 0);
        total += factor;
    }
    return total;
}

struct ComponentCountReport {
    std::int64_t count;
    int rank;
    bool equal_2r;
};

/// Compares the idempotent component count with 2^rank.
inline ComponentCountReport component_count_vs_rank(const MonoidDescriptor& d) {
    const auto comps = idempotent_components(d);
    const int r = unit_group(d).rank;
    const auto count = static_cast<std::int64_t>(comps.size());
    return {count, r, count == (std::int64_t{1} << r)};
}

/// The center component count of a noncommutative rank-1 monoid: with g =
/// gcd(|b - b'|, |c - c'|), the count is g + 1 (the g root-of-unity
/// components plus the zero branch) whenever neither differing exponent pair
/// has exactly one zero entry, and g when the zero branch degenerates away.
/// The closed-form count and the expansion of the component list are both
/// computed and must agree.
inline std::int64_t center_component_count_rank1(const MonoidDescriptor& d) {
    if (d.family != Family::MAA && d.family != Family::MAAQ)
        throw domain_error("the gcd count covers rank-1 families only");
    if (is_commutative_descriptor(d))
        throw domain_error("the gcd count covers noncommutative monoids only");
    const bool with_zero =
        z_count(d.p.b, d.p.bp) != 1 && z_count(d.p.c, d.p.cp) != 1;
    const std::int64_t expected =
        std::gcd(d.p.b - d.p.bp, d.p.c - d.p.cp) + (with_zero ? 1 : 0);
    const std::int64_t counted = expanded_component_count(center_components(d));
    if (counted != expected)
        throw error("internal: center counting convention mismatch");
    return counted;
}

/// Explicit rational points of a finite component, when the root-of-unity
/// orders make every member rational (orders 1 and 2); nullopt otherwise.
inline std::optional<std::vector<Point>> component_rational_points(
    const VarietyComponent& comp) {
    if (comp.binomial) return std::nullopt;
    std::vector<std::vector<Rational>> choices;
    for (const auto& c : comp.coords) {
        switch (c.kind) {
            case CoordSpec::Kind::Fixed: choices.push_back({c.value}); break;
            case CoordSpec::Kind::Free: return std::nullopt;
            case CoordSpec::Kind::RootsOfUnity: {
                if (c.order > 2) return std::nullopt;
                std::vector<Rational> values;
                if (c.includes_zero) values.push_back(Rational(0));
                values.push_back(Rational(1));
                if (c.order == 2) values.push_back(Rational(-1));
                choices.push_back(std::move(values));
                break;
            }
        }
    }
    std::vector<Point> points(1);
    for (const auto& ch : choices) {
        std::vector<Point> next;
        for (const auto& partial : points)
            for (const auto& v : ch) {
                Point q = partial;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        points = std::move(next);
    }
    return points;
}

}  // namespace aml

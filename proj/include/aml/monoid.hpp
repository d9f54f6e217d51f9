#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aml/errors.hpp"
#include "aml/laurent.hpp"
#include "aml/random.hpp"
#include "aml/rational.hpp"

namespace aml {

/// A polynomial multiplication map on affine n-space. Component i is a
/// regular polynomial in 2n variables: u1..un are the coordinates of the
/// first argument, v1..vn those of the second. If a unit point is stored it
/// has been verified to satisfy the two-sided unit identity.
class PolynomialMonoid {
public:
    PolynomialMonoid(std::vector<LaurentPolynomial> components,
                     std::optional<Point> unit = std::nullopt)
        : components_(std::move(components)) {
        if (components_.empty())
            throw arity_error("a multiplication needs at least one component");
        dimension_ = components_.size();
        for (const auto& c : components_) {
            if (c.arity() != 2 * dimension_)
                throw arity_error("component arity must be twice the dimension");
            if (!c.is_regular())
                throw domain_error(
                    "component has negative exponents; the map is not polynomial");
        }
        if (unit) attach_unit(std::move(*unit));
    }

    std::size_t dimension() const { return dimension_; }
    const std::vector<LaurentPolynomial>& components() const { return components_; }
    const std::optional<Point>& unit() const { return unit_; }

    /// Verifies and stores a unit point; throws unit_error on failure.
    void attach_unit(Point e);

private:
    std::size_t dimension_;
    std::vector<LaurentPolynomial> components_;
    std::optional<Point> unit_;
};

/// Componentwise evaluation of the multiplication at a pair of points.
inline Point multiply_points(const PolynomialMonoid& m, const Point& a, const Point& b) {
    const std::size_t n = m.dimension();
    if (a.size() != n || b.size() != n)
        throw arity_error("point length differs from monoid dimension");
    Point joint;
    joint.reserve(2 * n);
    joint.insert(joint.end(), a.begin(), a.end());
    joint.insert(joint.end(), b.begin(), b.end());
    Point out;
    out.reserve(n);
    for (const auto& c : m.components()) out.push_back(c.evaluate(joint));
    return out;
}

/// One differing monomial of the associativity defect, in the 3n-variable
/// ring x1..xn, y1..yn, z1..zn: the graded-lex smallest monomial of the
/// first nonzero component of mu(mu(x,y),z) - mu(x,mu(y,z)).
struct AssocWitness {
    std::size_t component;
    Exponents monomial;
    Rational coefficient;
};

struct AssocResult {
    bool associative;
    std::optional<AssocWitness> witness;
};

namespace detail {

/// Components of the monoid re-read in a 3n-variable ring, with the u-block
/// replaced by variables starting at `first` and the v-block by variables
/// starting at `second`.
inline std::vector<LaurentPolynomial> components_in_triple_ring(
    const PolynomialMonoid& m, std::size_t first, std::size_t second) {
    const std::size_t n = m.dimension();
    std::vector<LaurentPolynomial> args;
    args.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        args.push_back(LaurentPolynomial::variable(3 * n, first + i));
    for (std::size_t i = 0; i < n; ++i)
        args.push_back(LaurentPolynomial::variable(3 * n, second + i));
    std::vector<LaurentPolynomial> out;
    out.reserve(n);
    for (const auto& c : m.components()) out.push_back(c.substitute(args));
    return out;
}

}  // namespace detail

/// Exact check of the associativity identity by full symbolic expansion of
/// both composites in 3n fresh variables.
inline AssocResult check_associativity(const PolynomialMonoid& m) {
    const std::size_t n = m.dimension();
    const std::size_t triple = 3 * n;

    const auto inner_xy = detail::components_in_triple_ring(m, 0, n);
    const auto inner_yz = detail::components_in_triple_ring(m, n, 2 * n);

    std::vector<LaurentPolynomial> left_args = inner_xy;
    for (std::size_t i = 0; i < n; ++i)
        left_args.push_back(LaurentPolynomial::variable(triple, 2 * n + i));

    std::vector<LaurentPolynomial> right_args;
    right_args.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        right_args.push_back(LaurentPolynomial::variable(triple, i));
    right_args.insert(right_args.end(), inner_yz.begin(), inner_yz.end());

    for (std::size_t i = 0; i < n; ++i) {
        const LaurentPolynomial diff =
            m.components()[i].substitute(left_args) -
            m.components()[i].substitute(right_args);
        if (!diff.is_zero()) {
            const auto& [e, c] = *diff.terms().begin();
            return {false, AssocWitness{i, e, c}};
        }
    }
    return {true, std::nullopt};
}

/// Exact check that e is a two-sided unit: substituting e into either
/// argument block must give the identity map.
inline bool verify_unit(const PolynomialMonoid& m, const Point& e) {
    const std::size_t n = m.dimension();
    if (e.size() != n) return false;
    std::vector<LaurentPolynomial> consts;
    std::vector<LaurentPolynomial> vars;
    consts.reserve(n);
    vars.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        consts.push_back(LaurentPolynomial::constant(n, e[i]));
        vars.push_back(LaurentPolynomial::variable(n, i));
    }

    std::vector<LaurentPolynomial> left_args = consts;
    left_args.insert(left_args.end(), vars.begin(), vars.end());
    std::vector<LaurentPolynomial> right_args = vars;
    right_args.insert(right_args.end(), consts.begin(), consts.end());

    for (std::size_t i = 0; i < n; ++i) {
        const auto id = LaurentPolynomial::variable(n, i);
        if (m.components()[i].substitute(left_args) != id) return false;
        if (m.components()[i].substitute(right_args) != id) return false;
    }
    return true;
}

inline void PolynomialMonoid::attach_unit(Point e) {
    if (!verify_unit(*this, e))
        throw unit_error("declared unit fails the two-sided unit identity");
    unit_ = std::move(e);
}

/// Scans the 2^n grid {0,1}^n for a two-sided unit; every unit of the
/// classified monoids lies in this grid. Absence means "absent in the grid",
/// never "no unit exists".
inline std::optional<Point> find_unit(const PolynomialMonoid& m) {
    const std::size_t n = m.dimension();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Point e(n);
        for (std::size_t i = 0; i < n; ++i)
            e[i] = Rational((mask >> (n - 1 - i)) & 1);
        if (verify_unit(m, e)) return e;
    }
    return std::nullopt;
}

/// Exact comparison of every component against its argument-block swap.
inline bool check_commutativity(const PolynomialMonoid& m) {
    const std::size_t n = m.dimension();
    std::vector<LaurentPolynomial> swapped;
    swapped.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        swapped.push_back(LaurentPolynomial::variable(2 * n, n + i));
    for (std::size_t i = 0; i < n; ++i)
        swapped.push_back(LaurentPolynomial::variable(2 * n, i));
    for (const auto& c : m.components())
        if (c.substitute(swapped) != c) return false;
    return true;
}

struct SampleCounterexample {
    Point x, y, z;
};

struct SampleResult {
    bool associative;
    std::optional<SampleCounterexample> counterexample;
    std::uint64_t trials_run;
};

/// Seeded probabilistic associativity check: draws integer point triples
/// from [-1000, 1000]^n and evaluates both sides of the associativity
/// identity exactly. A counterexample is definitive; "associative" is only
/// probabilistic evidence.
inline SampleResult sample_associativity(const PolynomialMonoid& m,
                                         std::uint64_t trials,
                                         std::uint64_t seed) {
    if (trials == 0) throw domain_error("sample_associativity needs trials >= 1");
    const std::size_t n = m.dimension();
    SplitMix64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Point x(n), y(n), z(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = Rational(rng.range(-1000, 1000));
        for (std::size_t i = 0; i < n; ++i) y[i] = Rational(rng.range(-1000, 1000));
        for (std::size_t i = 0; i < n; ++i) z[i] = Rational(rng.range(-1000, 1000));
        const Point lhs = multiply_points(m, multiply_points(m, x, y), z);
        const Point rhs = multiply_points(m, x, multiply_points(m, y, z));
        if (lhs != rhs)
            return {false, SampleCounterexample{std::move(x), std::move(y), std::move(z)},
                    t + 1};
    }
    return {true, std::nullopt, trials};
}

/// Summary of the axiom checks for one multiplication map.
struct CheckReport {
    bool associative;
    std::optional<AssocWitness> witness;
    bool commutative;
    std::optional<Point> unit;
};

/// Runs the exact axiom checks; prefers a pre-verified unit on the monoid,
/// otherwise scans the {0,1}^n grid.
inline CheckReport check_monoid(const PolynomialMonoid& m) {
    CheckReport r{};
    const AssocResult assoc = check_associativity(m);
    r.associative = assoc.associative;
    r.witness = assoc.witness;
    r.commutative = check_commutativity(m);
    r.unit = m.unit() ? m.unit() : find_unit(m);
    return r;
}

}  // namespace aml

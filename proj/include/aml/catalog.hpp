#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aml/errors.hpp"
#include "aml/laurent.hpp"
#include "aml/monoid.hpp"

namespace aml {

/// The families of classified monoid structures on A^1, A^2 and A^3.
enum class Family {
    A1Add,         // x + y
    A1Mul,         // x * y
    A2Add,         // coordinatewise addition on A^2
    A2Semidirect,  // (x1*x2, x1^a*y2 + x2^b*y1)
    A2Torus,       // coordinatewise multiplication on A^2
    Add3,          // 3A
    U3,            // unipotent 3x3 upper triangular
    MAA,           // (x1*x2, x1^b*y2 + x2^b'*y1, x1^c*z2 + x2^c'*z1)
    MAAQ,          // MAA plus the correction polynomial Q_p
    MMA,           // (x1*x2, y1*y2, x1^b*y1^c*z2 + x2^b'*y2^c'*z1)
    Mul3,          // 3M
};

struct Quadruple {
    std::int64_t b = 0, bp = 0, c = 0, cp = 0;
    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

/// The (b,b',c,c') <-> (c,c',b,b') involution.
inline Quadruple symmetric(const Quadruple& p) { return {p.c, p.cp, p.b, p.bp}; }

/// The unique d > 0 witnessing compatibility of a quadruple.
struct CompatibilityWitness {
    std::int64_t d;
};

/// Decides compatibility by enumerating d in [1, max(c, c')]: the bound is
/// safe because c - b(d+1) < 0 forces d < c/b <= c.
inline std::optional<CompatibilityWitness> is_compatible(const Quadruple& p) {
    if (p.b <= 0 || p.bp <= 0 || p.c <= 0 || p.cp <= 0)
        throw domain_error("compatibility is defined for strictly positive quadruples");
    for (std::int64_t d = 1; d <= std::max(p.c, p.cp); ++d) {
        if (p.c - p.b * d < 0 || p.cp - p.bp * d < 0) continue;
        if (p.c - p.b * (d + 1) != p.cp - p.bp * (d + 1)) continue;
        if (p.c - p.b * (d + 1) >= 0) continue;
        return CompatibilityWitness{d};
    }
    return std::nullopt;
}

/// Binomial coefficient with exact arithmetic.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

/// The correction polynomial Q_p in the ring (x1, x2, y1, y2): the sum over
/// j + k = d+1 with j,k >= 1 of binom(d+1, k) x1^(c-bj) x2^(c'-b'k) y1^j y2^k.
/// Regular for every compatible quadruple.
inline LaurentPolynomial q_poly(const Quadruple& p) {
    const auto witness = is_compatible(p);
    if (!witness) throw domain_error("quadruple is not compatible");
    const std::int64_t d = witness->d;
    LaurentPolynomial q(4);
    for (std::int64_t j = 1; j <= d; ++j) {
        const std::int64_t k = d + 1 - j;
        q += LaurentPolynomial::monomial(
            4, {p.c - p.b * j, p.cp - p.bp * k, j, k}, Rational(binomial(d + 1, k)));
    }
    return q;
}

/// The commutative correction polynomial Q_{b,c} in (x1, x2, y1, y2), with
/// c = b*d + e, 0 <= e < b: the sum over j + k = d+1, j,k >= 1 of
/// binom(d+1, k) x1^(c-bj) x2^(c-bk) y1^j y2^k. Empty (zero) when c < b.
inline LaurentPolynomial q_bc(std::int64_t b, std::int64_t c) {
    if (b <= 0 || c <= 0) throw domain_error("Q_{b,c} needs b, c > 0");
    const std::int64_t d = c / b;
    LaurentPolynomial q(4);
    for (std::int64_t j = 1; j <= d; ++j) {
        const std::int64_t k = d + 1 - j;
        q += LaurentPolynomial::monomial(4, {c - b * j, c - b * k, j, k},
                                         Rational(binomial(d + 1, k)));
    }
    return q;
}

/// A tagged catalog entry naming one classified monoid.
struct MonoidDescriptor {
    Family family;
    Quadruple p{};             // MAA, MAAQ, MMA
    std::int64_t a2a = 0, a2b = 0;  // A2Semidirect exponents
    friend auto operator<=>(const MonoidDescriptor&, const MonoidDescriptor&) = default;
};

inline MonoidDescriptor simple_descriptor(Family f) { return {f, {}, 0, 0}; }
inline MonoidDescriptor maa(Quadruple p) { return {Family::MAA, p, 0, 0}; }
inline MonoidDescriptor maa_q(Quadruple p) { return {Family::MAAQ, p, 0, 0}; }
inline MonoidDescriptor mma(Quadruple p) { return {Family::MMA, p, 0, 0}; }
inline MonoidDescriptor a2_semidirect(std::int64_t a, std::int64_t b) {
    return {Family::A2Semidirect, {}, a, b};
}

inline std::size_t dimension(const MonoidDescriptor& d) {
    switch (d.family) {
        case Family::A1Add:
        case Family::A1Mul: return 1;
        case Family::A2Add:
        case Family::A2Semidirect:
        case Family::A2Torus: return 2;
        default: return 3;
    }
}

/// Rank of the unit group (dimension of a maximal torus).
inline int rank(const MonoidDescriptor& d) {
    switch (d.family) {
        case Family::A1Add: return 0;
        case Family::A1Mul: return 1;
        case Family::A2Add: return 0;
        case Family::A2Semidirect: return 1;
        case Family::A2Torus: return 2;
        case Family::Add3: return 0;
        case Family::U3: return 0;
        case Family::MAA:
        case Family::MAAQ: return 1;
        case Family::MMA: return 2;
        case Family::Mul3: return 3;
    }
    throw domain_error("unknown family");
}

inline void validate(const MonoidDescriptor& d) {
    switch (d.family) {
        case Family::MAA:
        case Family::MMA:
            if (d.p.b < 0 || d.p.bp < 0 || d.p.c < 0 || d.p.cp < 0)
                throw domain_error("quadruple entries must be nonnegative");
            return;
        case Family::MAAQ:
            if (!is_compatible(d.p))
                throw domain_error("Q-type descriptor needs a compatible quadruple");
            return;
        case Family::A2Semidirect:
            if (d.a2a < 0 || d.a2b < 0)
                throw domain_error("semidirect exponents must be nonnegative");
            return;
        default: return;
    }
}

inline bool is_commutative_descriptor(const MonoidDescriptor& d) {
    switch (d.family) {
        case Family::U3: return false;
        case Family::MAA:
        case Family::MAAQ:
        case Family::MMA: return d.p.b == d.p.bp && d.p.c == d.p.cp;
        case Family::A2Semidirect: return d.a2a == d.a2b;
        default: return true;
    }
}

namespace detail {

inline LaurentPolynomial mono6(std::initializer_list<std::pair<int, std::int64_t>> factors) {
    Exponents e(6, 0);
    for (auto [idx, exp] : factors) e[idx] += exp;
    return LaurentPolynomial::monomial(6, std::move(e), Rational(1));
}

}  // namespace detail

/// Builds the literal multiplication of the cited catalog row, with the unit
/// point found by the {0,1}^n grid scan attached.
inline PolynomialMonoid build_monoid(const MonoidDescriptor& d) {
    validate(d);
    using LP = LaurentPolynomial;
    std::vector<LP> comps;
    switch (d.family) {
        case Family::A1Add:
            comps.push_back(LP::variable(2, 0) + LP::variable(2, 1));
            break;
        case Family::A1Mul:
            comps.push_back(LP::variable(2, 0) * LP::variable(2, 1));
            break;
        case Family::A2Add:
            comps.push_back(LP::variable(4, 0) + LP::variable(4, 2));
            comps.push_back(LP::variable(4, 1) + LP::variable(4, 3));
            break;
        case Family::A2Torus:
            comps.push_back(LP::variable(4, 0) * LP::variable(4, 2));
            comps.push_back(LP::variable(4, 1) * LP::variable(4, 3));
            break;
        case Family::A2Semidirect: {
            // (u1*v1, u1^a*v2 + v1^b*u2)
            comps.push_back(LP::variable(4, 0) * LP::variable(4, 2));
            comps.push_back(LP::monomial(4, {d.a2a, 0, 0, 1}, Rational(1)) +
                            LP::monomial(4, {0, 1, d.a2b, 0}, Rational(1)));
            break;
        }
        case Family::Add3:
        case Family::U3: {
            for (int i = 0; i < 3; ++i)
                comps.push_back(LP::variable(6, i) + LP::variable(6, i + 3));
            if (d.family == Family::U3)
                comps[2] += detail::mono6({{0, 1}, {4, 1}});  // u1*v2
            break;
        }
        case Family::Mul3:
            for (int i = 0; i < 3; ++i)
                comps.push_back(LP::variable(6, i) * LP::variable(6, i + 3));
            break;
        case Family::MAA:
        case Family::MAAQ: {
            comps.push_back(detail::mono6({{0, 1}, {3, 1}}));  // u1*v1
            comps.push_back(detail::mono6({{0, d.p.b}, {4, 1}}) +
                            detail::mono6({{3, d.p.bp}, {1, 1}}));
            LP third = detail::mono6({{0, d.p.c}, {5, 1}}) +
                       detail::mono6({{3, d.p.cp}, {2, 1}});
            if (d.family == Family::MAAQ) {
                // Q_p(u1, v1, u2, v2)
                third += q_poly(d.p).substitute(
                    {LP::variable(6, 0), LP::variable(6, 3), LP::variable(6, 1),
                     LP::variable(6, 4)});
            }
            comps.push_back(std::move(third));
            break;
        }
        case Family::MMA: {
            comps.push_back(detail::mono6({{0, 1}, {3, 1}}));
            comps.push_back(detail::mono6({{1, 1}, {4, 1}}));
            comps.push_back(detail::mono6({{0, d.p.b}, {1, d.p.c}, {5, 1}}) +
                            detail::mono6({{3, d.p.bp}, {4, d.p.cp}, {2, 1}}));
            break;
        }
    }
    PolynomialMonoid m(std::move(comps));
    if (auto e = find_unit(m)) m.attach_unit(std::move(*e));
    return m;
}

/// Unit groups of the dimension-3 catalog monoids.
enum class GroupKind { Ga3, U3, G1, G2, Gm3 };

struct GroupDescriptor {
    GroupKind kind;
    std::int64_t l = 0, m = 0;  // characters of G1(l; m) / G2(l, m)
    int rank = 0;
};

inline GroupDescriptor unit_group(const MonoidDescriptor& d) {
    if (dimension(d) != 3)
        throw domain_error("unit-group table covers dimension-3 monoids only");
    validate(d);
    switch (d.family) {
        case Family::Add3: return {GroupKind::Ga3, 0, 0, 0};
        case Family::U3: return {GroupKind::U3, 0, 0, 0};
        case Family::MAA:
        case Family::MAAQ:
            return {GroupKind::G1, d.p.bp - d.p.b, d.p.cp - d.p.c, 1};
        case Family::MMA:
            return {GroupKind::G2, d.p.bp - d.p.b, d.p.cp - d.p.c, 2};
        case Family::Mul3: return {GroupKind::Gm3, 0, 0, 3};
        default: throw domain_error("unknown family");
    }
}

/// G1(l1; m1) iso G1(l2; m2) iff the pairs lie in one orbit of the swap and
/// simultaneous negation moves; all other G1 groups are non-isomorphic.
inline bool g1_isomorphic(std::int64_t l1, std::int64_t m1, std::int64_t l2,
                          std::int64_t m2) {
    return (l2 == l1 && m2 == m1) || (l2 == m1 && m2 == l1) ||
           (l2 == -l1 && m2 == -m1) || (l2 == -m1 && m2 == -l1);
}

/// G2(l, m) is classified by gcd(|l|, |m|): the character lattice admits a
/// GL2(Z) change of basis carrying the defining character to (g, 0), and the
/// gcd is recovered from the component count of the group center.
inline bool g2_isomorphic(std::int64_t l1, std::int64_t m1, std::int64_t l2,
                          std::int64_t m2) {
    return std::gcd(l1, m1) == std::gcd(l2, m2);
}

inline bool group_isomorphic(const GroupDescriptor& g, const GroupDescriptor& h) {
    if (g.kind != h.kind) return false;
    switch (g.kind) {
        case GroupKind::G1: return g1_isomorphic(g.l, g.m, h.l, h.m);
        case GroupKind::G2: return g2_isomorphic(g.l, g.m, h.l, h.m);
        default: return true;
    }
}

enum class Iso { Yes, No, Undetermined };

inline std::string to_string(Iso v) {
    switch (v) {
        case Iso::Yes: return "yes";
        case Iso::No: return "no";
        case Iso::Undetermined: return "undetermined";
    }
    return "?";
}

/// Decides isomorphism of catalog descriptors. Within the MAA family the
/// answer is equality or symmetry of quadruples; Q-type descriptors are
/// rigid; the MMA family answers "yes" under the simultaneous swap, "no"
/// under a unit-group or commutative-reduction obstruction, and
/// "undetermined" otherwise.
inline Iso are_isomorphic(const MonoidDescriptor& d1, const MonoidDescriptor& d2) {
    if (dimension(d1) != dimension(d2))
        throw domain_error("isomorphism is decided within one dimension");
    validate(d1);
    validate(d2);
    if (d1.family != d2.family) return Iso::No;
    switch (d1.family) {
        case Family::MAA:
            return (d1.p == d2.p || d1.p == symmetric(d2.p)) ? Iso::Yes : Iso::No;
        case Family::MAAQ: return d1.p == d2.p ? Iso::Yes : Iso::No;
        case Family::MMA: {
            if (d1.p == d2.p || d1.p == symmetric(d2.p)) return Iso::Yes;
            const auto sorted_pair = [](std::int64_t x, std::int64_t y) {
                return std::minmax(x, y);
            };
            // Commutative reductions must match (left pair (b,c), right (b',c')).
            if (sorted_pair(d1.p.b, d1.p.c) != sorted_pair(d2.p.b, d2.p.c))
                return Iso::No;
            if (sorted_pair(d1.p.bp, d1.p.cp) != sorted_pair(d2.p.bp, d2.p.cp))
                return Iso::No;
            if (!group_isomorphic(unit_group(d1), unit_group(d2))) return Iso::No;
            return Iso::Undetermined;
        }
        case Family::A2Semidirect:
            return (d1.a2a == d2.a2a && d1.a2b == d2.a2b) ? Iso::Yes : Iso::No;
        default: return Iso::Yes;  // parameterless families
    }
}

/// Lexicographically least descriptor in the yes-orbit; idempotent.
inline MonoidDescriptor canonical_form(const MonoidDescriptor& d) {
    validate(d);
    if (d.family == Family::MAA || d.family == Family::MMA) {
        MonoidDescriptor alt = d;
        alt.p = symmetric(d.p);
        return std::min(d, alt);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Descriptor text syntax, e.g. MAA(1,2,1,3), A2_semidirect(2,3), 3A.

inline std::string family_name(Family f) {
    switch (f) {
        case Family::A1Add: return "A1_add";
        case Family::A1Mul: return "A1_mul";
        case Family::A2Add: return "A2_add";
        case Family::A2Semidirect: return "A2_semidirect";
        case Family::A2Torus: return "A2_torus";
        case Family::Add3: return "3A";
        case Family::U3: return "U3";
        case Family::MAA: return "MAA";
        case Family::MAAQ: return "MAA_Q";
        case Family::MMA: return "MMA";
        case Family::Mul3: return "3M";
    }
    return "?";
}

inline std::string to_text(const MonoidDescriptor& d) {
    switch (d.family) {
        case Family::MAA:
        case Family::MAAQ:
        case Family::MMA:
            return family_name(d.family) + "(" + std::to_string(d.p.b) + "," +
                   std::to_string(d.p.bp) + "," + std::to_string(d.p.c) + "," +
                   std::to_string(d.p.cp) + ")";
        case Family::A2Semidirect:
            return "A2_semidirect(" + std::to_string(d.a2a) + "," +
                   std::to_string(d.a2b) + ")";
        default: return family_name(d.family);
    }
}

/// Human-oriented name; commutative quadruple families use the notation of
/// the commutative catalog, e.g. M+A(2)+A_Q(2,3).
inline std::string display_name(const MonoidDescriptor& d) {
    if (is_commutative_descriptor(d)) {
        switch (d.family) {
            case Family::MAA:
                return "M+A(" + std::to_string(d.p.b) + ")+A(" +
                       std::to_string(d.p.c) + ")";
            case Family::MAAQ:
                return "M+A(" + std::to_string(d.p.b) + ")+A_Q(" +
                       std::to_string(d.p.b) + "," + std::to_string(d.p.c) + ")";
            case Family::MMA:
                return "M+M+A(" + std::to_string(d.p.b) + "," +
                       std::to_string(d.p.c) + ")";
            default: break;
        }
    }
    return to_text(d);
}

inline MonoidDescriptor parse_descriptor(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;

    std::string name = s;
    std::vector<std::int64_t> params;
    const auto open = s.find('(');
    if (open != std::string::npos) {
        if (s.back() != ')') throw domain_error("descriptor: missing ')' in '" + text + "'");
        name = s.substr(0, open);
        std::string body = s.substr(open + 1, s.size() - open - 2);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const auto comma = body.find(',', pos);
            const std::string item =
                body.substr(pos, comma == std::string::npos ? std::string::npos
                                                            : comma - pos);
            try {
                std::size_t used = 0;
                params.push_back(std::stoll(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw domain_error("descriptor: bad integer parameter '" + item + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }

    const auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw domain_error("descriptor '" + name + "' takes " + std::to_string(k) +
                               " parameters");
    };
    MonoidDescriptor d;
    if (name == "A1_add") { need(0); d = simple_descriptor(Family::A1Add); }
    else if (name == "A1_mul") { need(0); d = simple_descriptor(Family::A1Mul); }
    else if (name == "A2_add") { need(0); d = simple_descriptor(Family::A2Add); }
    else if (name == "A2_torus") { need(0); d = simple_descriptor(Family::A2Torus); }
    else if (name == "A2_semidirect") { need(2); d = a2_semidirect(params[0], params[1]); }
    else if (name == "3A") { need(0); d = simple_descriptor(Family::Add3); }
    else if (name == "U3") { need(0); d = simple_descriptor(Family::U3); }
    else if (name == "3M") { need(0); d = simple_descriptor(Family::Mul3); }
    else if (name == "MAA") { need(4); d = maa({params[0], params[1], params[2], params[3]}); }
    else if (name == "MAA_Q") { need(4); d = maa_q({params[0], params[1], params[2], params[3]}); }
    else if (name == "MMA") { need(4); d = mma({params[0], params[1], params[2], params[3]}); }
    else throw domain_error("unknown descriptor family '" + name + "'");
    validate(d);
    return d;
}

/// Static description of one catalog family, for listings.
struct FamilyInfo {
    Family family;
    std::string name;
    std::size_t dim;
    int rank;
    std::string parameters;
    std::string multiplication;
};

inline std::vector<FamilyInfo> catalog_families(std::optional<std::size_t> dim = {}) {
    static const std::vector<FamilyInfo> all = {
        {Family::A1Add, "A1_add", 1, 0, "", "(u1 + v1)"},
        {Family::A1Mul, "A1_mul", 1, 1, "", "(u1*v1)"},
        {Family::A2Add, "A2_add", 2, 0, "", "(u1 + v1, u2 + v2)"},
        {Family::A2Semidirect, "A2_semidirect", 2, 1, "a, b >= 0",
         "(u1*v1, u1^a*v2 + v1^b*u2)"},
        {Family::A2Torus, "A2_torus", 2, 2, "", "(u1*v1, u2*v2)"},
        {Family::Add3, "3A", 3, 0, "", "(u1 + v1, u2 + v2, u3 + v3)"},
        {Family::U3, "U3", 3, 0, "", "(u1 + v1, u2 + v2, u3 + v3 + u1*v2)"},
        {Family::MAA, "MAA", 3, 1, "b, b', c, c' >= 0",
         "(u1*v1, u1^b*v2 + v1^b'*u2, u1^c*v3 + v1^c'*u3)"},
        {Family::MAAQ, "MAA_Q", 3, 1, "compatible (b, b', c, c') > 0",
         "(u1*v1, u1^b*v2 + v1^b'*u2, u1^c*v3 + v1^c'*u3 + Q_p(u1, v1, u2, v2))"},
        {Family::MMA, "MMA", 3, 2, "b, b', c, c' >= 0",
         "(u1*v1, u2*v2, u1^b*u2^c*v3 + v1^b'*v2^c'*u3)"},
        {Family::Mul3, "3M", 3, 3, "", "(u1*v1, u2*v2, u3*v3)"},
    };
    if (!dim) return all;
    std::vector<FamilyInfo> out;
    for (const auto& f : all)
        if (f.dim == *dim) out.push_back(f);
    return out;
}

}  // namespace aml

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "aml/errors.hpp"
#include "aml/rational.hpp"

namespace aml {

/// Exponent vector of a monomial; entries may be negative (Laurent terms).
using Exponents = std::vector<std::int64_t>;

/// Graded lexicographic order: total degree first, then lexicographic
/// comparison of the exponent entries. This is the canonical term order of
/// the library; printing iterates it in descending direction.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
        const std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Invariants: no stored coefficient is zero, every exponent vector has
/// length arity(), and two polynomials are equal iff their term maps are
/// identical. Values are immutable after construction apart from the
/// compound assignment operators, and every operation is pure.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    /// The zero polynomial in `arity` variables.
    explicit LaurentPolynomial(std::size_t arity) : arity_(arity) {}

    static LaurentPolynomial constant(std::size_t arity, Rational value) {
        LaurentPolynomial p(arity);
        if (value != 0) p.terms_.emplace(Exponents(arity, 0), std::move(value));
        return p;
    }

    static LaurentPolynomial variable(std::size_t arity, std::size_t index) {
        if (index >= arity) throw arity_error("variable index out of range");
        Exponents e(arity, 0);
        e[index] = 1;
        return monomial(arity, std::move(e), Rational(1));
    }

    static LaurentPolynomial monomial(std::size_t arity, Exponents exponents,
                                      Rational coefficient) {
        if (exponents.size() != arity)
            throw arity_error("exponent vector length differs from arity");
        LaurentPolynomial p(arity);
        if (coefficient != 0)
            p.terms_.emplace(std::move(exponents), std::move(coefficient));
        return p;
    }

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        const Exponents& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    }

    bool is_monomial() const { return terms_.size() == 1; }

    /// True iff every stored exponent is nonnegative, i.e. the value lies in
    /// the ordinary polynomial ring. Cancellation happens before storage, so
    /// this tests the fully reduced form.
    bool is_regular() const {
        for (const auto& [e, c] : terms_)
            for (std::int64_t x : e)
                if (x < 0) return false;
        return true;
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r(arity_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& other) {
        require_same_arity(other);
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& other) {
        require_same_arity(other);
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                       const LaurentPolynomial& b) {
        a.require_same_arity(b);
        LaurentPolynomial r(a.arity_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.arity_);
                for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& other) {
        *this = *this * other;
        return *this;
    }

    /// f^k by repeated squaring for k >= 0 (with f^0 = 1, including f = 0);
    /// negative k only for invertible (single-term) values.
    LaurentPolynomial pow(std::int64_t k) const {
        if (k < 0) {
            if (terms_.size() != 1)
                throw substitution_error(
                    "negative power of a value that is not a single monomial");
            const auto& [e, c] = *terms_.begin();
            Exponents scaled(arity_);
            for (std::size_t i = 0; i < arity_; ++i) scaled[i] = e[i] * k;
            return monomial(arity_, std::move(scaled), rational_pow(c, k));
        }
        LaurentPolynomial acc = constant(arity_, Rational(1));
        LaurentPolynomial base = *this;
        std::uint64_t e = static_cast<std::uint64_t>(k);
        while (e > 0) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    /// Composition: replaces variable i by args[i]. All args must share one
    /// arity, which becomes the arity of the result. A variable occurring
    /// with a negative exponent may only be substituted by an invertible
    /// monomial; anything else is rejected.
    LaurentPolynomial substitute(const std::vector<LaurentPolynomial>& args) const {
        if (args.size() != arity_)
            throw arity_error("substitute: argument count differs from arity");
        const std::size_t out_arity = args.empty() ? 0 : args[0].arity();
        for (const auto& a : args)
            if (a.arity() != out_arity)
                throw arity_error("substitute: arguments have mixed arities");

        // Power cache per argument: exponent -> args[i]^exponent.
        std::vector<std::map<std::int64_t, LaurentPolynomial>> powers(arity_);
        auto arg_power = [&](std::size_t i, std::int64_t e) -> const LaurentPolynomial& {
            auto it = powers[i].find(e);
            if (it == powers[i].end()) {
                if (e < 0 && !args[i].is_monomial())
                    throw substitution_error(
                        "negative power of a non-monomial substitution argument");
                it = powers[i].emplace(e, args[i].pow(e)).first;
            }
            return it->second;
        };

        LaurentPolynomial result(out_arity);
        for (const auto& [e, c] : terms_) {
            LaurentPolynomial t = constant(out_arity, c);
            for (std::size_t i = 0; i < arity_; ++i)
                if (e[i] != 0) t *= arg_power(i, e[i]);
            result += t;
        }
        return result;
    }

    /// Exact evaluation at a rational point; 0^0 = 1, and a zero coordinate
    /// under a negative exponent is a domain error.
    Rational evaluate(const Point& point) const {
        if (point.size() != arity_)
            throw arity_error("evaluate: point length differs from arity");
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational v = c;
            for (std::size_t i = 0; i < arity_; ++i)
                if (e[i] != 0) v *= rational_pow(point[i], e[i]);
            sum += v;
        }
        return sum;
    }

    /// Exact structural equality (same arity required).
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.require_same_arity(b);
        return a.terms_ == b.terms_;
    }

    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return !(a == b);
    }

private:
    void require_same_arity(const LaurentPolynomial& other) const {
        if (arity_ != other.arity_)
            throw arity_error("operands have different arities");
    }

    void add_term(const Exponents& e, Rational c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t arity_;
    TermMap terms_;
};

inline LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    return f + g;
}

inline LaurentPolynomial mul(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    return f * g;
}

inline bool equals(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    return f == g;
}

/// One term rendered as "coeff*name^exp*..." with the coefficient omitted
/// when it is +/-1 on a non-constant term.
inline std::string term_to_string(const Exponents& e, const Rational& c,
                                  const std::vector<std::string>& names) {
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += names[i];
        if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) return to_string(c);
    if (c == 1) return factors;
    if (c == -1) return "-" + factors;
    return to_string(c) + "*" + factors;
}

/// Renders terms in descending graded-lexicographic order.
inline std::string to_string(const LaurentPolynomial& p,
                             const std::vector<std::string>& names) {
    if (names.size() != p.arity())
        throw arity_error("to_string: name count differs from arity");
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (out.empty()) {
            out = term_to_string(e, c, names);
        } else if (c < 0) {
            out += " - " + term_to_string(e, -c, names);
        } else {
            out += " + " + term_to_string(e, c, names);
        }
    }
    return out;
}

/// Names x1..xn for a generic ring of the given arity.
inline std::vector<std::string> generic_names(std::size_t arity) {
    std::vector<std::string> names;
    names.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i)
        names.push_back("x" + std::to_string(i + 1));
    return names;
}

/// Names u1..un, v1..vn for the 2n-variable ring of a multiplication map on
/// affine n-space (u = first argument, v = second argument).
inline std::vector<std::string> argument_pair_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    return names;
}

}  // namespace aml

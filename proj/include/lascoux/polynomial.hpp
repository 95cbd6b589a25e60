#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "lascoux/compositions.hpp"

namespace lascoux {

using Int = mpz_class;

// Monomial beta^beta_exp * x^exponents.  beta is a formal bookkeeping
// parameter, not an extra variable: monomial orders ignore it.
struct BMonomial {
    int beta = 0;
    WeakComposition exponents;

    BMonomial() = default;
    BMonomial(int beta_exp, WeakComposition exps) : beta(beta_exp), exponents(std::move(exps)) {}

    int degree() const { return size_of(exponents); }
    bool operator==(const BMonomial& rhs) const
    {
        return beta == rhs.beta && exponents == rhs.exponents;
    }
};

// Canonical term order: exponent vectors ascending in standard lex, ties by
// ascending beta exponent.  Canonical serialization walks this order, so the
// first term of an atom generating function is its shape monomial x^gamma.
struct TermOrder {
    bool operator()(const BMonomial& a, const BMonomial& b) const
    {
        int c = lex_compare(a.exponents, b.exponents);
        if (c != 0)
            return c < 0;
        return a.beta < b.beta;
    }
};

struct LeadingTerm {
    BMonomial monomial;
    Int coefficient;
    // True when several beta powers share the leading exponent vector; the
    // lowest beta exponent is reported.
    bool beta_ambiguous = false;
};

// Exact sparse polynomial in x_1..x_nvars over Z[beta]; zero coefficients are
// never stored.
class BPolynomial {
public:
    using TermMap = std::map<BMonomial, Int, TermOrder>;

    explicit BPolynomial(int nvars = 0) : nvars_(nvars) {}

    static BPolynomial zero(int nvars) { return BPolynomial(nvars); }
    static BPolynomial constant(int nvars, const Int& c);
    static BPolynomial monomial(int nvars, const BMonomial& m, const Int& c = 1);
    // x^gamma in nvars = gamma.size() variables.
    static BPolynomial x_power(const WeakComposition& gamma);
    static BPolynomial variable(int nvars, int i);  // x_i, 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Int& coefficient_of(const BMonomial& m) const;
    int max_exponent() const;
    int max_beta() const;

    // Canonically first term (smallest exponent vector in the term order);
    // throws on the zero polynomial.
    const std::pair<const BMonomial, Int>& front_term() const;
    // Term whose exponent vector is lexicographically largest, beta ignored;
    // ties across beta exponents report the lowest one.  Throws on zero.
    LeadingTerm lex_leading() const;

    void add_term(const BMonomial& m, const Int& c);

    BPolynomial& operator+=(const BPolynomial& rhs);
    BPolynomial& operator-=(const BPolynomial& rhs);
    BPolynomial operator+(const BPolynomial& rhs) const;
    BPolynomial operator-(const BPolynomial& rhs) const;
    BPolynomial operator-() const;
    BPolynomial operator*(const BPolynomial& rhs) const;
    BPolynomial& operator*=(const Int& scalar);
    BPolynomial operator*(const Int& scalar) const;

    bool operator==(const BPolynomial& rhs) const
    {
        return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const BPolynomial& rhs) const { return !(*this == rhs); }

    // Multiplies by beta^b * x^e (e padded to nvars).
    BPolynomial times_monomial(const BMonomial& m, const Int& c = 1) const;

    // Drops every term with beta exponent > 0.
    BPolynomial beta_zero() const;

    // Swaps x_i and x_{i+1} in every term (1 <= i < nvars).
    BPolynomial swap_vars(int i) const;

    // Canonical text form, e.g. "x1^2*x2 + b*x1^2*x2^2"; "0" when zero.
    std::string to_string() const;
    // Parses the canonical grammar (tolerant of term order).  nvars < 0 means
    // infer from the largest variable index.
    static BPolynomial parse(const std::string& text, int nvars = -1);

private:
    void check_same_vars(const BPolynomial& rhs) const;

    int nvars_;
    TermMap terms_;
};

}  // namespace lascoux

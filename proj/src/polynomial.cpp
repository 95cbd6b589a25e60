#include "lascoux/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace lascoux {

namespace {
const Int kZero = 0;
}

BPolynomial BPolynomial::constant(int nvars, const Int& c)
{
    BPolynomial p(nvars);
    p.add_term(BMonomial(0, WeakComposition(nvars, 0)), c);
    return p;
}

BPolynomial BPolynomial::monomial(int nvars, const BMonomial& m, const Int& c)
{
    BPolynomial p(nvars);
    p.add_term(m, c);
    return p;
}

BPolynomial BPolynomial::x_power(const WeakComposition& gamma)
{
    return monomial(static_cast<int>(gamma.size()), BMonomial(0, gamma));
}

BPolynomial BPolynomial::variable(int nvars, int i)
{
    if (i < 1 || i > nvars)
        throw std::invalid_argument("BPolynomial::variable: index out of range");
    WeakComposition e(nvars, 0);
    e[i - 1] = 1;
    return monomial(nvars, BMonomial(0, std::move(e)));
}

const Int& BPolynomial::coefficient_of(const BMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

int BPolynomial::max_exponent() const
{
    int k = 0;
    for (const auto& [m, c] : terms_)
        k = std::max(k, max_part(m.exponents));
    return k;
}

int BPolynomial::max_beta() const
{
    int k = 0;
    for (const auto& [m, c] : terms_)
        k = std::max(k, m.beta);
    return k;
}

const std::pair<const BMonomial, Int>& BPolynomial::front_term() const
{
    if (terms_.empty())
        throw std::domain_error("front_term: zero polynomial");
    return *terms_.begin();
}

LeadingTerm BPolynomial::lex_leading() const
{
    if (terms_.empty())
        throw std::domain_error("lex_leading: zero polynomial");
    auto it = std::prev(terms_.end());
    const WeakComposition& top = it->first.exponents;
    // Walk back to the lowest beta exponent sharing the leading exponents.
    auto first = it;
    while (first != terms_.begin() && std::prev(first)->first.exponents == top)
        --first;
    LeadingTerm lead{first->first, first->second, first != it};
    return lead;
}

void BPolynomial::add_term(const BMonomial& m, const Int& c)
{
    if (c == 0)
        return;
    if (static_cast<int>(m.exponents.size()) != nvars_)
        throw std::invalid_argument("add_term: exponent vector has wrong length");
    if (m.beta < 0)
        throw std::invalid_argument("add_term: negative beta exponent");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void BPolynomial::check_same_vars(const BPolynomial& rhs) const
{
    if (nvars_ != rhs.nvars_)
        throw std::invalid_argument("BPolynomial: mismatched variable counts");
}

BPolynomial& BPolynomial::operator+=(const BPolynomial& rhs)
{
    check_same_vars(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

BPolynomial& BPolynomial::operator-=(const BPolynomial& rhs)
{
    check_same_vars(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

BPolynomial BPolynomial::operator+(const BPolynomial& rhs) const
{
    BPolynomial result = *this;
    result += rhs;
    return result;
}

BPolynomial BPolynomial::operator-(const BPolynomial& rhs) const
{
    BPolynomial result = *this;
    result -= rhs;
    return result;
}

BPolynomial BPolynomial::operator-() const
{
    BPolynomial result(nvars_);
    for (const auto& [m, c] : terms_)
        result.terms_.emplace(m, -c);
    return result;
}

BPolynomial BPolynomial::operator*(const BPolynomial& rhs) const
{
    check_same_vars(rhs);
    BPolynomial result(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            BMonomial m(ma.beta + mb.beta, ma.exponents);
            for (int i = 0; i < nvars_; ++i)
                m.exponents[i] += mb.exponents[i];
            result.add_term(m, ca * cb);
        }
    }
    return result;
}

BPolynomial& BPolynomial::operator*=(const Int& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

BPolynomial BPolynomial::operator*(const Int& scalar) const
{
    BPolynomial result = *this;
    result *= scalar;
    return result;
}

BPolynomial BPolynomial::times_monomial(const BMonomial& m, const Int& c) const
{
    WeakComposition shift = padded(m.exponents, nvars_);
    BPolynomial result(nvars_);
    for (const auto& [t, tc] : terms_) {
        BMonomial moved(t.beta + m.beta, t.exponents);
        for (int i = 0; i < nvars_; ++i)
            moved.exponents[i] += shift[i];
        result.add_term(moved, tc * c);
    }
    return result;
}

BPolynomial BPolynomial::beta_zero() const
{
    BPolynomial result(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.beta == 0)
            result.terms_.emplace(m, c);
    return result;
}

BPolynomial BPolynomial::swap_vars(int i) const
{
    if (i < 1 || i >= nvars_)
        throw std::invalid_argument("swap_vars: index out of range");
    BPolynomial result(nvars_);
    for (const auto& [m, c] : terms_) {
        BMonomial swapped = m;
        std::swap(swapped.exponents[i - 1], swapped.exponents[i]);
        result.add_term(swapped, c);
    }
    return result;
}

std::string BPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::vector<std::string> factors;
        if (m.beta == 1)
            factors.push_back("b");
        else if (m.beta > 1)
            factors.push_back("b^" + std::to_string(m.beta));
        for (int i = 0; i < nvars_; ++i) {
            if (m.exponents[i] == 1)
                factors.push_back("x" + std::to_string(i + 1));
            else if (m.exponents[i] > 1)
                factors.push_back("x" + std::to_string(i + 1) + "^" + std::to_string(m.exponents[i]));
        }
        if (abs != 1 || factors.empty())
            factors.insert(factors.begin(), abs.get_str());
        for (size_t f = 0; f < factors.size(); ++f) {
            if (f > 0)
                out += "*";
            out += factors[f];
        }
    }
    return out;
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_space()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char ch)
    {
        skip_space();
        if (pos < text.size() && text[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_digit()
    {
        skip_space();
        return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    }

    Int parse_integer()
    {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("polynomial parse: expected integer at position " +
                                        std::to_string(start));
        return Int(text.substr(start, pos - start));
    }

    int parse_small_int()
    {
        Int v = parse_integer();
        if (!v.fits_sint_p())
            throw std::invalid_argument("polynomial parse: exponent too large");
        return static_cast<int>(v.get_si());
    }
};

}  // namespace

BPolynomial BPolynomial::parse(const std::string& text, int nvars)
{
    struct RawTerm {
        Int coeff;
        int beta;
        std::vector<std::pair<int, int>> powers;  // (variable index, exponent)
    };
    std::vector<RawTerm> raw;
    int max_index = 0;

    Parser p(text);
    p.skip_space();
    if (p.pos >= text.size())
        throw std::invalid_argument("polynomial parse: empty input");

    bool negative = p.eat('-');
    if (!negative)
        p.eat('+');
    while (true) {
        RawTerm term{1, 0, {}};
        if (negative)
            term.coeff = -1;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            p.skip_space();
            if (p.peek_digit()) {
                term.coeff *= p.parse_integer();
                saw_factor = true;
            } else if (p.pos < text.size() && text[p.pos] == 'b') {
                ++p.pos;
                term.beta += p.eat('^') ? p.parse_small_int() : 1;
                saw_factor = true;
            } else if (p.pos < text.size() && text[p.pos] == 'x') {
                ++p.pos;
                int index = p.parse_small_int();
                if (index < 1)
                    throw std::invalid_argument("polynomial parse: bad variable index");
                int exp = p.eat('^') ? p.parse_small_int() : 1;
                term.powers.emplace_back(index, exp);
                max_index = std::max(max_index, index);
                saw_factor = true;
            } else {
                throw std::invalid_argument("polynomial parse: unexpected character at position " +
                                            std::to_string(p.pos));
            }
            expect_factor = p.eat('*');
        }
        if (!saw_factor)
            throw std::invalid_argument("polynomial parse: empty term");
        raw.push_back(std::move(term));

        p.skip_space();
        if (p.pos >= text.size())
            break;
        if (p.eat('+'))
            negative = false;
        else if (p.eat('-'))
            negative = true;
        else
            throw std::invalid_argument("polynomial parse: expected '+' or '-' at position " +
                                        std::to_string(p.pos));
    }

    if (raw.size() == 1 && raw[0].powers.empty() && raw[0].beta == 0 && raw[0].coeff == 0 &&
        nvars < 0)
        nvars = 0;
    if (nvars < 0)
        nvars = max_index;
    BPolynomial result(nvars);
    for (const auto& term : raw) {
        WeakComposition exps(nvars, 0);
        for (auto [index, exp] : term.powers) {
            if (index > nvars)
                throw std::invalid_argument("polynomial parse: variable index exceeds nvars");
            exps[index - 1] += exp;
        }
        result.add_term(BMonomial(term.beta, std::move(exps)), term.coeff);
    }
    return result;
}

}  // namespace lascoux

#include "lascoux/expansion.hpp"

#include <stdexcept>

#include "lascoux/genfun.hpp"

namespace lascoux {

const BPolynomial& AtomCache::lascoux(const WeakComposition& gamma)
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = atoms_.find(gamma);
        if (it != atoms_.end())
            return it->second;
    }
    BPolynomial atom = lascoux_atom(gamma);
    std::lock_guard<std::mutex> lock(mutex_);
    return atoms_.emplace(gamma, std::move(atom)).first->second;
}

const BPolynomial& AtomCache::qgroth(const WeakComposition& alpha, int nvars)
{
    auto key = std::make_pair(alpha, nvars);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = qgroths_.find(key);
        if (it != qgroths_.end())
            return it->second;
    }
    BPolynomial value = qsym_grothendieck(alpha, nvars);
    std::lock_guard<std::mutex> lock(mutex_);
    return qgroths_.emplace(std::move(key), std::move(value)).first->second;
}

namespace {

// All beta layers sitting on the canonically-first exponent vector.
BetaPoly front_layers(const BPolynomial& f, WeakComposition& exponents)
{
    exponents = f.front_term().first.exponents;
    BetaPoly layers;
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it) {
        if (it->first.exponents != exponents)
            break;
        layers[it->first.beta] = it->second;
    }
    return layers;
}

void subtract_scaled(BPolynomial& r, const BetaPoly& scale, const BPolynomial& g)
{
    int nvars = r.nvars();
    for (const auto& [beta, coeff] : scale)
        r -= g.times_monomial(BMonomial(beta, WeakComposition(nvars, 0)), coeff);
}

}  // namespace

AtomExpansion expand_in_atoms(const BPolynomial& f, AtomCache* cache)
{
    AtomCache local;
    if (!cache)
        cache = &local;

    AtomExpansion expansion;
    expansion.nvars = f.nvars();
    BPolynomial r = f;
    WeakComposition previous;
    bool have_previous = false;
    while (!r.is_zero()) {
        WeakComposition delta;
        BetaPoly layers = front_layers(r, delta);
        if (have_previous && lex_compare(previous, delta) >= 0)
            throw std::logic_error("expand_in_atoms: elimination target did not advance");
        previous = delta;
        have_previous = true;
        subtract_scaled(r, layers, cache->lascoux(delta));
        expansion.coeffs.emplace(std::move(delta), std::move(layers));
    }
    return expansion;
}

BPolynomial reconstruct(const AtomExpansion& expansion, AtomCache* cache)
{
    AtomCache local;
    if (!cache)
        cache = &local;
    BPolynomial sum(expansion.nvars);
    for (const auto& [gamma, layers] : expansion.coeffs) {
        const BPolynomial& atom = cache->lascoux(gamma);
        for (const auto& [beta, coeff] : layers)
            sum += atom.times_monomial(BMonomial(beta, WeakComposition(expansion.nvars, 0)), coeff);
    }
    return sum;
}

namespace {

// Checks that within every class of the partition-of-gammas induced by `key`
// the coefficients agree, including the gammas missing from the expansion
// (their coefficient is zero).
template <typename ClassMembers>
bool uniform_on_classes(const AtomExpansion& expansion, ClassMembers&& members_of)
{
    for (const auto& [gamma, layers] : expansion.coeffs) {
        for (const WeakComposition& other : members_of(gamma)) {
            auto it = expansion.coeffs.find(other);
            if (it == expansion.coeffs.end() || it->second != layers)
                return false;
        }
    }
    return true;
}

}  // namespace

Classification classify(const AtomExpansion& expansion)
{
    Classification result;
    result.lascoux_positive = true;
    for (const auto& [gamma, layers] : expansion.coeffs)
        for (const auto& [beta, coeff] : layers)
            if (coeff < 0)
                result.lascoux_positive = false;

    int nvars = expansion.nvars;
    bool symmetric = uniform_on_classes(expansion, [&](const WeakComposition& gamma) {
        return rearrangements_of(lambda_of(gamma), nvars);
    });
    bool quasisymmetric =
        symmetric || uniform_on_classes(expansion, [&](const WeakComposition& gamma) {
            WeakComposition alpha = gamma_plus(gamma);
            std::vector<WeakComposition> members;
            std::vector<int> slot(nvars, 0);
            auto rec = [&](auto&& self, size_t part, int row) -> void {
                if (part == alpha.size()) {
                    members.push_back(slot);
                    return;
                }
                for (int r = row; r <= nvars - static_cast<int>(alpha.size() - part) + 1; ++r) {
                    slot[r - 1] = alpha[part];
                    self(self, part + 1, r + 1);
                    slot[r - 1] = 0;
                }
            };
            rec(rec, 0, 1);
            return members;
        });

    result.symmetry = symmetric  ? Symmetry::Symmetric
                      : quasisymmetric ? Symmetry::Quasisymmetric
                                       : Symmetry::General;
    return result;
}

Classification classify(const BPolynomial& f, AtomCache* cache)
{
    return classify(expand_in_atoms(f, cache));
}

std::map<WeakComposition, BetaPoly> expand_in_qgroth(const BPolynomial& f, AtomCache* cache)
{
    AtomCache local;
    if (!cache)
        cache = &local;

    Classification cls = classify(f, cache);
    if (cls.symmetry == Symmetry::General)
        throw std::invalid_argument("expand_in_qgroth: input is not quasisymmetric");

    std::map<WeakComposition, BetaPoly> result;
    BPolynomial r = f;
    while (!r.is_zero()) {
        WeakComposition delta;
        BetaPoly layers = front_layers(r, delta);
        WeakComposition alpha = gamma_plus(delta);
        WeakComposition front_padded(static_cast<size_t>(r.nvars()) - alpha.size(), 0);
        front_padded.insert(front_padded.end(), alpha.begin(), alpha.end());
        if (delta != front_padded)
            throw std::logic_error("expand_in_qgroth: leading term not of quasisymmetric form");
        subtract_scaled(r, layers, cache->qgroth(alpha, r.nvars()));
        result.emplace(std::move(alpha), std::move(layers));
    }
    return result;
}

const char* to_string(Symmetry s)
{
    switch (s) {
    case Symmetry::General:
        return "general";
    case Symmetry::Quasisymmetric:
        return "quasisymmetric";
    case Symmetry::Symmetric:
        return "symmetric";
    }
    return "unknown";
}

}  // namespace lascoux

#include "lascoux/json_io.hpp"

#include <stdexcept>

namespace lascoux {

namespace {

Json int_to_json(const Int& value)
{
    if (value.fits_slong_p())
        return Json(value.get_si());
    return Json(value.get_str());
}

Int int_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return Int(j.get<std::string>());
    throw std::invalid_argument("json: expected integer or decimal string");
}

std::vector<int> ints_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("json: expected an array of integers");
    return j.get<std::vector<int>>();
}

}  // namespace

Json to_json(const BPolynomial& f)
{
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms())
        terms.push_back({{"c", int_to_json(c)}, {"b", m.beta}, {"e", m.exponents}});
    return Json{{"nvars", f.nvars()}, {"terms", terms}};
}

BPolynomial polynomial_from_json(const Json& j)
{
    BPolynomial f(j.at("nvars").get<int>());
    for (const Json& term : j.at("terms")) {
        BMonomial m(term.value("b", 0), padded(ints_from_json(term.at("e")), f.nvars()));
        f.add_term(m, int_from_json(term.at("c")));
    }
    return f;
}

Json to_json(const SetFilling& filling)
{
    Json j;
    j["shape"] = filling.shape();
    j["inner"] = size_of(filling.inner()) == 0 ? Json() : Json(filling.inner());
    switch (filling.basement().kind) {
    case Basement::Kind::Concrete:
        j["basement"] = filling.basement().values;
        break;
    case Basement::Kind::Large:
        j["basement"] = "large";
        break;
    case Basement::Kind::None:
        j["basement"] = "none";
        break;
    }
    j["rows"] = filling.row_boxes();
    return j;
}

SetFilling filling_from_json(const Json& j)
{
    WeakComposition shape = ints_from_json(j.at("shape"));
    WeakComposition inner;
    if (j.contains("inner") && !j.at("inner").is_null())
        inner = ints_from_json(j.at("inner"));
    Basement basement;
    const Json& b = j.at("basement");
    if (b.is_string()) {
        std::string kind = b.get<std::string>();
        if (kind == "large")
            basement = Basement::large();
        else if (kind == "none")
            basement = Basement::none();
        else
            throw std::invalid_argument("json: unknown basement '" + kind + "'");
    } else {
        basement = Basement::rows(ints_from_json(b));
    }
    std::vector<std::vector<SetFilling::Box>> rows;
    for (const Json& row : j.at("rows")) {
        rows.emplace_back();
        for (const Json& box : row)
            rows.back().push_back(ints_from_json(box));
    }
    return SetFilling(std::move(shape), std::move(basement), std::move(rows), std::move(inner));
}

Json to_json(const SetTableau& tableau)
{
    return Json{{"outer", tableau.outer()},
                {"inner", tableau.inner()},
                {"convention",
                 tableau.convention() == Convention::Reverse ? "reverse" : "increasing"},
                {"rows", tableau.row_boxes()}};
}

SetTableau tableau_from_json(const Json& j)
{
    Partition outer = ints_from_json(j.at("outer"));
    Partition inner(outer.size(), 0);
    if (j.contains("inner") && !j.at("inner").is_null())
        inner = ints_from_json(j.at("inner"));
    std::string conv = j.at("convention").get<std::string>();
    if (conv != "reverse" && conv != "increasing")
        throw std::invalid_argument("json: unknown convention '" + conv + "'");
    std::vector<std::vector<SetTableau::Box>> rows;
    for (const Json& row : j.at("rows")) {
        rows.emplace_back();
        for (const Json& box : row)
            rows.back().push_back(ints_from_json(box));
    }
    return SetTableau(std::move(outer), std::move(inner),
                      conv == "reverse" ? Convention::Reverse : Convention::Increasing,
                      std::move(rows));
}

Json to_json(const LenartPair& pair)
{
    return Json{{"lambda", pair.lambda}, {"mu", pair.mu}, {"t", pair.t_rows},
                {"u", pair.u_rows}};
}

LenartPair lenart_pair_from_json(const Json& j)
{
    LenartPair pair;
    pair.lambda = ints_from_json(j.at("lambda"));
    pair.mu = ints_from_json(j.at("mu"));
    for (const Json& row : j.at("t"))
        pair.t_rows.push_back(ints_from_json(row));
    for (const Json& row : j.at("u"))
        pair.u_rows.push_back(ints_from_json(row));
    return pair;
}

Json to_json(const GenomicFilling& filling)
{
    Json rows = Json::array();
    for (int r = 1; r <= filling.rows(); ++r) {
        Json row = Json::array();
        for (int c = 1; c <= filling.outer()[r - 1]; ++c) {
            if (!filling.has_box(r, c))
                row.push_back(Json());
            else
                row.push_back({filling.label(r, c).family, filling.label(r, c).gene});
        }
        rows.push_back(row);
    }
    return Json{{"shape", filling.outer()}, {"inner", filling.inner()}, {"boxes", rows}};
}

GenomicFilling genomic_from_json(const Json& j)
{
    WeakComposition outer = ints_from_json(j.at("shape"));
    WeakComposition inner;
    if (j.contains("inner") && !j.at("inner").is_null())
        inner = ints_from_json(j.at("inner"));
    if (inner.empty())
        inner.assign(outer.size(), 0);
    std::vector<std::vector<GenomicLabel>> labels(outer.size());
    const Json& rows = j.at("boxes");
    for (size_t r = 0; r < outer.size(); ++r) {
        const Json& row = rows.at(r);
        for (int c = 1; c <= outer[r]; ++c) {
            const Json& cell = row.at(c - 1);
            if (c <= inner[r]) {
                if (!cell.is_null())
                    throw std::invalid_argument("json: label on a basement cell");
                continue;
            }
            auto pair = ints_from_json(cell);
            if (pair.size() != 2)
                throw std::invalid_argument("json: genomic label must be [family, gene]");
            labels[r].push_back({pair[0], pair[1]});
        }
    }
    return GenomicFilling(std::move(outer), std::move(inner), std::move(labels));
}

Json beta_poly_to_json(const BetaPoly& p)
{
    Json out = Json::array();
    for (const auto& [beta, coeff] : p)
        out.push_back({{"b", beta}, {"c", int_to_json(coeff)}});
    return out;
}

Json to_json(const AtomExpansion& expansion)
{
    Json out = Json::array();
    for (const auto& [gamma, layers] : expansion.coeffs)
        out.push_back({{"gamma", gamma}, {"coeff", beta_poly_to_json(layers)}});
    return out;
}

}  // namespace lascoux

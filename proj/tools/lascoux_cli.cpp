// Command-line surface: exact skyline-filling combinatorics, generating
// functions, basis expansions, bijections, and the verification harness.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lascoux/bijections.hpp"
#include "lascoux/expansion.hpp"
#include "lascoux/genfun.hpp"
#include "lascoux/genomic.hpp"
#include "lascoux/json_io.hpp"
#include "lascoux/operators.hpp"
#include "lascoux/verify.hpp"

namespace {

using namespace lascoux;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

Json parse_json_input(const std::string& path)
{
    return Json::parse(read_input(path));
}

BPolynomial read_polynomial(const std::string& path, int vars)
{
    std::string text = read_input(path);
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::invalid_argument("empty polynomial input");
    if (text[first] == '{')
        return polynomial_from_json(Json::parse(text));
    return BPolynomial::parse(text, vars);
}

void print_polynomial(const BPolynomial& f, bool json)
{
    if (json)
        std::cout << to_json(f).dump() << "\n";
    else
        std::cout << f.to_string() << "\n";
}

int default_jobs()
{
    if (const char* env = std::getenv("LASCOUX_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs > 0)
            return jobs;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Set-valued skyline fillings: atoms, Grothendieck polynomials, "
                 "divided differences, bijections, and identity checks"};
    app.require_subcommand(1);

    bool json_output = false;
    app.add_flag("--json", json_output, "emit JSON instead of text");

    std::string gamma_arg, lambda_arg, alpha_arg, delta_arg, file_arg, method, basis, check;
    int vars = -1, parts = -1;
    bool beta0 = false, strict_lattice = false;

    auto* atom = app.add_subcommand("atom", "combinatorial Lascoux atom of a weak composition");
    atom->add_option("GAMMA", gamma_arg)->required();
    atom->add_flag("--beta0", beta0, "set beta = 0 (Demazure atom)");

    auto* key = app.add_subcommand("key", "key polynomial (Demazure character)");
    key->add_option("GAMMA", gamma_arg)->required();

    auto* lpoly = app.add_subcommand("lascoux-poly", "Lascoux polynomial (tau operators)");
    lpoly->add_option("GAMMA", gamma_arg)->required();

    auto* latom = app.add_subcommand("lascoux-atom", "Lascoux atom, by fillings or operators");
    latom->add_option("GAMMA", gamma_arg)->required();
    latom->add_option("--method", method, "fillings|operators")
        ->default_val("fillings")
        ->check(CLI::IsMember({"fillings", "operators"}));

    auto* groth = app.add_subcommand("grothendieck", "Grothendieck polynomial of a partition");
    groth->add_option("LAMBDA", lambda_arg)->required();
    groth->add_option("--vars", vars, "number of variables")->required();

    auto* qgroth_cmd = app.add_subcommand("qgroth", "quasisymmetric Grothendieck function");
    qgroth_cmd->add_option("ALPHA", alpha_arg)->required();
    qgroth_cmd->add_option("--vars", vars)->required();

    auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial as a sum of Demazure atoms");
    schur_cmd->add_option("LAMBDA", lambda_arg)->required();
    schur_cmd->add_option("--vars", vars)->required();

    auto* lenart_cmd = app.add_subcommand("lenart", "Schur expansion of the Grothendieck polynomial");
    lenart_cmd->add_option("LAMBDA", lambda_arg)->required();
    lenart_cmd->add_option("--vars", vars)->required();

    auto* expand_cmd = app.add_subcommand("expand", "expand a polynomial in a basis");
    expand_cmd->add_option("--basis", basis, "lascoux|qgroth")
        ->default_val("lascoux")
        ->check(CLI::IsMember({"lascoux", "qgroth"}));
    expand_cmd->add_option("FILE", file_arg, "input file or - for stdin");
    expand_cmd->add_option("--vars", vars, "variable count for text input");

    auto* classify_cmd = app.add_subcommand("classify", "quasisymmetry/symmetry classification");
    classify_cmd->add_option("FILE", file_arg);
    classify_cmd->add_option("--vars", vars);

    auto* rho_cmd = app.add_subcommand("rho", "skyline filling to reverse tableau");
    rho_cmd->add_option("FILE", file_arg);

    auto* rho_inv_cmd = app.add_subcommand("rho-inv", "reverse tableau to skyline filling");
    rho_inv_cmd->add_option("FILE", file_arg);
    rho_inv_cmd->add_option("--parts", parts, "pad the output shape to this many rows");

    auto* uncrowd_cmd = app.add_subcommand("uncrowd", "set-valued tableau to recording pair");
    uncrowd_cmd->add_option("FILE", file_arg);

    auto* crowd_cmd = app.add_subcommand("crowd", "recording pair to set-valued tableau");
    crowd_cmd->add_option("FILE", file_arg);

    auto* gcount = app.add_subcommand("genomic-count", "genomic structure constant");
    gcount->add_option("GAMMA", gamma_arg)->required();
    gcount->add_option("LAMBDA", lambda_arg)->required();
    gcount->add_option("DELTA", delta_arg)->required();
    gcount->add_flag("--strict-lattice", strict_lattice,
                     "use the strict reverse-lattice reading");

    VerifyOptions vopts;
    vopts.jobs = default_jobs();
    auto* verify_cmd = app.add_subcommand("verify", "run a named identity check");
    verify_cmd->add_option("CHECK", check)->required()->check(CLI::IsMember(verify_check_names()));
    verify_cmd->add_option("--max-boxes", vopts.max_boxes, "size bound (check-specific)");
    verify_cmd->add_option("--max-parts", vopts.max_parts, "part-count bound");
    verify_cmd->add_option("--vars", vopts.vars, "variable count");
    verify_cmd->add_option("--jobs", vopts.jobs, "parallel workers (default $LASCOUX_JOBS or 1)");

    // Accept global flags such as --json after the subcommand as well.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (atom->parsed()) {
            BPolynomial f = lascoux_atom(parse_composition(gamma_arg));
            print_polynomial(beta0 ? f.beta_zero() : f, json_output);
        } else if (key->parsed()) {
            print_polynomial(key_polynomial(parse_composition(gamma_arg)), json_output);
        } else if (lpoly->parsed()) {
            print_polynomial(lascoux_polynomial(parse_composition(gamma_arg)), json_output);
        } else if (latom->parsed()) {
            WeakComposition gamma = parse_composition(gamma_arg);
            print_polynomial(method == "operators" ? lascoux_atom_via_operators(gamma)
                                                   : lascoux_atom(gamma),
                             json_output);
        } else if (groth->parsed()) {
            print_polynomial(grothendieck(parse_composition(lambda_arg), vars), json_output);
        } else if (qgroth_cmd->parsed()) {
            print_polynomial(qsym_grothendieck(parse_composition(alpha_arg), vars), json_output);
        } else if (schur_cmd->parsed()) {
            print_polynomial(schur(parse_composition(lambda_arg), vars), json_output);
        } else if (lenart_cmd->parsed()) {
            auto expansion = lenart_expansion(parse_composition(lambda_arg), vars);
            if (json_output) {
                Json out = Json::array();
                for (const auto& [mu, g] : expansion)
                    out.push_back({{"mu", mu}, {"g", g}});
                std::cout << out.dump() << "\n";
            } else {
                for (const auto& [mu, g] : expansion)
                    std::cout << format_composition(mu) << " " << g << "\n";
            }
        } else if (expand_cmd->parsed()) {
            BPolynomial f = read_polynomial(file_arg, vars);
            if (basis == "lascoux") {
                std::cout << to_json(expand_in_atoms(f)).dump() << "\n";
            } else {
                Json out = Json::array();
                for (const auto& [alpha, layers] : expand_in_qgroth(f))
                    out.push_back({{"gamma", alpha}, {"coeff", beta_poly_to_json(layers)}});
                std::cout << out.dump() << "\n";
            }
        } else if (classify_cmd->parsed()) {
            Classification cls = classify(read_polynomial(file_arg, vars));
            if (json_output)
                std::cout << Json{{"symmetry", to_string(cls.symmetry)},
                                  {"lascoux_positive", cls.lascoux_positive}}
                                 .dump()
                          << "\n";
            else
                std::cout << to_string(cls.symmetry)
                          << (cls.lascoux_positive ? ", lascoux-positive" : ", not lascoux-positive")
                          << "\n";
        } else if (rho_cmd->parsed()) {
            std::cout << to_json(rho(filling_from_json(parse_json_input(file_arg)))).dump()
                      << "\n";
        } else if (rho_inv_cmd->parsed()) {
            std::cout
                << to_json(rho_inv(tableau_from_json(parse_json_input(file_arg)), parts)).dump()
                << "\n";
        } else if (uncrowd_cmd->parsed()) {
            std::cout << to_json(uncrowd(tableau_from_json(parse_json_input(file_arg)))).dump()
                      << "\n";
        } else if (crowd_cmd->parsed()) {
            std::cout << to_json(crowd(lenart_pair_from_json(parse_json_input(file_arg)))).dump()
                      << "\n";
        } else if (gcount->parsed()) {
            long long count = genomic_structure_constant(
                parse_composition(gamma_arg), parse_composition(lambda_arg),
                parse_composition(delta_arg), ContentConvention::ReverseOfLambda,
                strict_lattice ? LatticeRule::Strict : LatticeRule::Weak);
            std::cout << count << "\n";
        } else if (verify_cmd->parsed()) {
            VerifyReport report = run_check(check, vopts);
            if (json_output)
                std::cout << report_to_json(report).dump() << "\n";
            else
                std::cout << format_report(report);
            return report.ok() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}

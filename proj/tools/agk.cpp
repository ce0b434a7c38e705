// Command-line front end: factorizations, centralizer checks, vector
// decomposition, and the randomized verification suite, all with JSON I/O.
//
// Exit codes: 0 success, 1 precondition/property failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "agk/commutators.hpp"
#include "agk/factorization.hpp"
#include "agk/harness.hpp"
#include "agk/json_io.hpp"

using agk::operator+;
using agk::operator-;
using agk::operator*;

namespace {

constexpr double kClassTol = 1e-9;   // input-class checks
constexpr double kReportTol = 1e-8;  // reconstruction reporting threshold

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts inline JSON (starts with '{' or '[') or a file path.
agk::json load_json(const std::string& arg) {
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw UsageError("empty JSON argument");
    if (arg[first] != '{' && arg[first] != '[') {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open file: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return agk::json::parse(text);
    } catch (const agk::json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

agk::Matrix load_matrix(const std::string& arg) {
    try {
        return agk::matrix_from_json(load_json(arg));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

agk::AffineElement load_affine(const std::string& arg) {
    try {
        return agk::affine_from_json(load_json(arg));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void emit(const agk::json& doc) { std::cout << doc.dump(2) << "\n"; }

std::uint64_t default_seed() {
    if (const char* env = std::getenv("AGK_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::vector<std::size_t> parse_n_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(static_cast<std::size_t>(std::stoul(item)));
    }
    if (out.empty()) throw UsageError("--n: expected a comma-separated list of dimensions");
    return out;
}

int run_factor(const std::string& kind, const std::string& input, double x1,
               const std::string& d_arg, double tol) {
    using namespace agk;
    if (kind == "d-element") {
        if (d_arg.empty()) throw UsageError("factor d-element: --d is required");
        const Matrix d = load_matrix(d_arg);
        const std::size_t n = d.dim() + 1;
        const auto pairs = express_D_element(x1, d, kClassTol);
        Vec xt(n, 0.0);
        xt[0] = x1;
        Matrix lt = Matrix::identity(n);
        lt.set_block(1, 1, d);
        const double residual = distance(evaluate(pairs, n), AffineElement(xt, lt));
        json jp = json::array();
        for (const auto& cp : pairs) jp.push_back(json{{"g", to_json(cp.g)}, {"h", to_json(cp.h)}});
        emit(json{{"n", n}, {"pairs", std::move(jp)}, {"residual", residual}});
        return residual <= tol ? 0 : 1;
    }

    if (input.empty()) throw UsageError("factor " + kind + ": --input is required");
    const Matrix m = load_matrix(input);
    const std::size_t n = m.dim();

    if (kind == "so") {
        const GeneratorWord w = so_factorize(m, kClassTol);
        const double residual = distance(w.evaluate(), m);
        json out = to_json(w);
        out["residual"] = residual;
        emit(out);
        return residual <= tol ? 0 : 1;
    }
    if (kind == "sl-blocks") {
        const GeneratorWord w = sl_block_factorize(m, kClassTol);
        const double residual = distance(w.evaluate(), m) / m.frobenius();
        json out = to_json(w);
        out["residual"] = residual;
        emit(out);
        return residual <= tol ? 0 : 1;
    }
    if (kind == "transvections") {
        const auto word = transvection_factorize(m, kClassTol);
        GeneratorWord w(n);
        json letter_res = json::array();
        for (const Transvection& t : word) {
            w.letters.emplace_back(t);
            letter_res.push_back(std::abs(det(t.embed(n)) - 1.0));
        }
        const double residual = distance(w.evaluate(), m) / m.frobenius();
        json out = to_json(w);
        out["letter_residuals"] = std::move(letter_res);
        out["residual"] = residual;
        emit(out);
        return residual <= tol ? 0 : 1;
    }
    if (kind == "commutators") {
        const auto pairs = sl_commutator_factorize(m, kClassTol);
        GeneratorWord w(n);
        json letter_res = json::array();
        for (const CommutatorPair& cp : pairs) {
            w.letters.emplace_back(cp);
            letter_res.push_back(
                std::max(std::abs(det(cp.g) - 1.0), std::abs(det(cp.h) - 1.0)));
        }
        const double residual = distance(w.evaluate(), m) / m.frobenius();
        json out = to_json(w);
        out["letter_residuals"] = std::move(letter_res);
        out["residual"] = residual;
        emit(out);
        return residual <= tol ? 0 : 1;
    }
    if (kind == "glplus") {
        const auto [lambda, sl] = glplus_split(m, kClassTol);
        GeneratorWord w(n);
        w.letters.emplace_back(ScalarDiagonal{lambda});
        const double residual =
            std::max(std::abs(det(sl) - 1.0), distance(sl * lambda, m) / m.frobenius());
        json out = to_json(w);
        out["sl_factor"] = to_json(sl);
        out["residual"] = residual;
        emit(out);
        return residual <= tol ? 0 : 1;
    }
    throw UsageError("factor: unknown kind " + kind);
}

agk::LemmaId lemma_from_name(const std::string& s) {
    if (s == "neg-identity") return agk::LemmaId::NEG_IDENTITY;
    if (s == "sign-flip") return agk::LemmaId::SIGN_FLIP;
    if (s == "scalar") return agk::LemmaId::SCALAR;
    if (s == "j-sl2") return agk::LemmaId::J_SL2;
    if (s == "block-m") return agk::LemmaId::BLOCK_M;
    throw UsageError("centralizer: unknown lemma " + s);
}

agk::DetClass class_from_name(const std::string& s) {
    if (s == "gl") return agk::DetClass::GL;
    if (s == "sl") return agk::DetClass::SL;
    if (s == "abs-sl") return agk::DetClass::ABS_SL;
    if (s == "gl-plus") return agk::DetClass::GL_PLUS;
    throw UsageError("centralizer: unknown determinant class " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructive matrix-group toolkit for R^n x| G(n)"};
    app.require_subcommand(1);

    // factor
    auto* factor = app.add_subcommand("factor", "factor a matrix into tagged generators");
    std::string factor_kind, factor_input, factor_d;
    double factor_x1 = 0.0, factor_tol = kReportTol;
    factor->add_option("kind", factor_kind, "so | sl-blocks | transvections | commutators | glplus | d-element")
        ->required()
        ->check(CLI::IsMember({"so", "sl-blocks", "transvections", "commutators", "glplus", "d-element"}));
    factor->add_option("--input", factor_input, "matrix JSON (inline or file path)");
    factor->add_option("--x1", factor_x1, "first translation coordinate (d-element)");
    factor->add_option("--d", factor_d, "SL(n-1) matrix JSON (d-element)");
    factor->add_option("--tol", factor_tol, "reconstruction reporting threshold");

    // centralizer
    auto* cent = app.add_subcommand("centralizer", "closed-form centralizer membership check");
    std::string cent_lemma, cent_check, cent_class = "gl";
    double cent_tol = kClassTol;
    cent->add_option("--lemma", cent_lemma, "neg-identity | sign-flip | scalar | j-sl2 | block-m")
        ->required()
        ->check(CLI::IsMember({"neg-identity", "sign-flip", "scalar", "j-sl2", "block-m"}));
    cent->add_option("--check", cent_check, "affine element JSON (inline or file path)")->required();
    cent->add_option("--class", cent_class, "determinant class: gl | sl | abs-sl | gl-plus")
        ->check(CLI::IsMember({"gl", "sl", "abs-sl", "gl-plus"}));
    cent->add_option("--tol", cent_tol, "membership tolerance");

    // decompose
    auto* dec = app.add_subcommand("decompose", "split a vector into two equal-norm vectors");
    auto* dec_vec = dec->add_subcommand("vector", "x = y + z with ||y|| = ||z|| = radius");
    std::string dec_x;
    double dec_delta = 0.0, dec_tol = 1e-12;
    bool dec_have_delta = false;
    dec_vec->add_option("--x", dec_x, "vector JSON array (inline or file path)")->required();
    dec_vec->add_option("--delta", dec_delta, "ball diameter (default: unit-sphere form)")
        ->each([&](const std::string&) { dec_have_delta = true; });
    dec_vec->add_option("--tol", dec_tol, "boundary tolerance");
    dec->require_subcommand(1);

    // verify
    auto* ver = app.add_subcommand("verify", "randomized property verification");
    std::string ver_property, ver_n = "3";
    std::size_t ver_trials = 200;
    double ver_tol = kReportTol;
    std::uint64_t ver_seed = default_seed();
    bool ver_all = false;
    ver->add_option("--property", ver_property, "property tag (see --help-properties)");
    ver->add_flag("--all", ver_all, "run every applicable property");
    ver->add_option("--n", ver_n, "dimension, or comma list with --all");
    ver->add_option("--trials", ver_trials, "trials per (property, n) pair");
    ver->add_option("--tol", ver_tol, "failure threshold on the trial residual");
    ver->add_option("--seed", ver_seed, "base seed (env AGK_SEED overrides the default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (factor->parsed())
            return run_factor(factor_kind, factor_input, factor_x1, factor_d, factor_tol);

        if (cent->parsed()) {
            const agk::AffineElement g = load_affine(cent_check);
            agk::CentralizerSpec spec{lemma_from_name(cent_lemma), g.dim(),
                                      class_from_name(cent_class)};
            const auto residuals = agk::membership_residuals(spec, g, cent_tol);
            const bool member = agk::membership(spec, g, cent_tol);
            emit(agk::json{{"member", member}, {"residuals", residuals}});
            return 0;
        }

        if (dec->parsed()) {
            const agk::json jx = load_json(dec_x);
            if (!jx.is_array()) throw UsageError("decompose vector: --x must be a JSON array");
            const agk::Vec x = jx.get<agk::Vec>();
            const agk::SphereSumWitness w = dec_have_delta
                                                ? agk::ball_sum_decompose(x, dec_delta, dec_tol)
                                                : agk::unit_sum_decompose(x, dec_tol);
            agk::json out = agk::to_json(w);
            out["residuals"] = agk::json{
                {"sum", agk::norm(w.y + w.z - x)},
                {"norm_y", std::abs(agk::norm(w.y) - w.radius)},
                {"norm_z", std::abs(agk::norm(w.z) - w.radius)}};
            emit(out);
            return 0;
        }

        if (ver->parsed()) {
            if (!ver_all && ver_property.empty())
                throw UsageError("verify: pass --property <tag> or --all");
            std::vector<agk::VerificationReport> reports;
            if (ver_all) {
                reports = agk::run_all(parse_n_list(ver_n), ver_trials, ver_tol, ver_seed);
            } else {
                const auto prop = agk::property_from_name(ver_property);
                if (!prop) throw UsageError("verify: unknown property " + ver_property);
                const auto n_list = parse_n_list(ver_n);
                for (std::size_t n : n_list)
                    reports.push_back(agk::verify(*prop, n, ver_trials, ver_tol, ver_seed));
            }
            agk::json out = agk::json::array();
            std::size_t failures = 0;
            for (const auto& r : reports) {
                out.push_back(agk::to_json(r));
                failures += r.failures;
            }
            emit(reports.size() == 1 ? out.front() : out);
            return failures == 0 ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

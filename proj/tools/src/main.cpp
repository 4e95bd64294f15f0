#include "sbarlab/expr.hpp"
#include "sbarlab/suites.hpp"

#include <sbar/halgebra.hpp>
#include <sbar/tmodule.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace sbar;

namespace {

// exit codes: 0 ok, 1 failing cases or runtime error, 2 usage or input error
constexpr int kUsageError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<Scalar, Scalar> parse_pair(const std::string& text, const char* flag)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw InputError(std::string(flag) + " expects two comma-separated values, got '" + text + "'");
    try {
        return {parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InputError(std::string(flag) + ": cannot read '" + text + "'");
    }
}

MultiIndex parse_index(const std::string& text, const char* flag)
{
    const auto [a, b] = parse_pair(text, flag);
    if (a.get_den() != 1 || b.get_den() != 1)
        throw InputError(std::string(flag) + " expects integers");
    return {static_cast<int>(a.get_num().get_si()), static_cast<int>(b.get_num().get_si())};
}

Gl2Module parse_lambda(const std::string& text)
{
    const auto [l1, l2] = parse_pair(text, "--lambda");
    try {
        return gl2_simple(l1, l2);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

TModule make_module(const std::string& lambda, const std::string& type)
{
    const auto [a1, a2] = parse_pair(type, "--type");
    return TModule(a1, a2, parse_lambda(lambda));
}

sbarlab::ExprPtr parse_or_throw(const std::string& text)
{
    try {
        return sbarlab::parse_element(text);
    } catch (const sbarlab::SyntaxError& e) {
        throw InputError(std::string(dynamic_cast<const sbarlab::RangeError*>(&e) ? "range error: " : "syntax error: ") +
                         e.what());
    }
}

int cmd_verify(const std::string& suite, const sbarlab::SuiteOptions& opts, const std::string& json_path,
               bool quiet)
{
    sbarlab::SuiteReport report;
    try {
        report = sbarlab::run_suite(suite, opts);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (!json_path.empty()) {
        if (json_path == "-")
            std::cout << sbarlab::emit_report(report, sbarlab::Format::Json);
        else
            sbarlab::write_report(report, sbarlab::Format::Json, json_path);
    }
    if (!quiet && json_path != "-")
        std::cout << sbarlab::emit_report(report, sbarlab::Format::Text);
    return report.failures() == 0 ? 0 : 1;
}

void print_rows(const ClosureReport& r)
{
    std::cout << "degree  closure  ambient\n";
    for (const auto& row : r.rows)
        std::cout << row.degree << "  " << row.closure_dim << "  " << row.ambient_dim << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"sbarlab: exact computations in U(Sbar_2) and its Whittaker modules"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sbarlab::kEngineVersion);

    std::string suite, json_path;
    std::optional<int> max_degree;
    sbarlab::SuiteOptions suite_opts;
    bool quiet = false;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--max-degree", max_degree, "degree window")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", suite_opts.seed, "random seed");
    verify->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");
    verify->add_option("--workers", suite_opts.workers, "worker threads (default: SBAR_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--quiet", quiet, "suppress the text report");

    std::string expr_text;
    auto* eval = app.add_subcommand("eval", "normal form in the localization U_(-1)");
    eval->add_option("expr", expr_text, "element expression")->required();
    auto* phi = app.add_subcommand("phi", "image under phi in D_2 (x) U(Sbar_2^{>=0})");
    phi->add_option("expr", expr_text, "element expression")->required();

    std::string alpha_text, lambda_text, type_text = "1,1", seed_expr;
    bool want_xi = false, want_pi1 = false;
    auto* ygen = app.add_subcommand("ygen", "the element Y_alpha, xi(Y_alpha) or pi_1(Y_alpha)");
    ygen->add_option("--alpha", alpha_text, "index a,b")->required();
    auto* xi_flag = ygen->add_flag("--xi", want_xi, "print xi(Y_alpha)");
    auto* pi1_flag = ygen->add_flag("--pi1", want_pi1, "print pi_1(Y_alpha)");
    xi_flag->excludes(pi1_flag);
    ygen->add_option("--lambda", lambda_text, "print the matrix of pi_1(Y_alpha) on V(l1,l2)")->needs(pi1_flag);

    int degree = 0, gen_degree = 2, seed_index = 0;
    auto* whittaker = app.add_subcommand("whittaker", "Whittaker vectors of T(A_2^a, V(lambda))");
    whittaker->add_option("--lambda", lambda_text, "highest weight l1,l2")->required();
    whittaker->add_option("--type", type_text, "type a1,a2")->required();
    whittaker->add_option("--degree", degree, "polynomial degree window")->required()->check(CLI::NonNegativeNumber);

    auto* closure = app.add_subcommand("closure", "submodule generated by x (1 (x) v_k)");
    closure->add_option("--lambda", lambda_text, "highest weight l1,l2")->required();
    closure->add_option("--type", type_text, "type a1,a2")->required();
    closure->add_option("--seed-expr", seed_expr, "element x of U_(-1)")->required();
    closure->add_option("--seed-index", seed_index, "k in 1 (x) v_k (default 0)")->check(CLI::NonNegativeNumber);
    closure->add_option("--degree", degree, "max polynomial degree D")->required()->check(CLI::NonNegativeNumber);
    closure->add_option("--gen-degree", gen_degree, "generator degree G (default 2)")->check(CLI::NonNegativeNumber);

    auto* freeness = app.add_subcommand("freeness", "rank of h^m (1 (x) v_k) in T(A_2^1, V(lambda))");
    freeness->add_option("--lambda", lambda_text, "highest weight l1,l2")->required();
    freeness->add_option("--degree", degree, "bound on |m|")->required()->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*verify) {
            suite_opts.max_degree = max_degree;
            return cmd_verify(suite, suite_opts, json_path, quiet);
        }
        if (*eval) {
            std::cout << to_string(sbarlab::eval_loc(*parse_or_throw(expr_text))) << '\n';
            return 0;
        }
        if (*phi) {
            std::cout << to_string(sbarlab::eval_phi(*parse_or_throw(expr_text))) << '\n';
            return 0;
        }
        if (*ygen) {
            const MultiIndex a = parse_index(alpha_text, "--alpha");
            if (!is_y_index(a))
                throw InputError("Y" + a.str() + " is not defined");
            if (want_xi)
                std::cout << to_string(xi_y(a)) << '\n';
            else if (want_pi1 && !lambda_text.empty())
                std::cout << pi1_matrix(a, parse_lambda(lambda_text)).str() << '\n';
            else if (want_pi1)
                std::cout << to_string(pi1(a)) << '\n';
            else
                std::cout << to_string(y_element(a)) << '\n';
            return 0;
        }
        if (*whittaker) {
            const TModule m = make_module(lambda_text, type_text);
            const auto basis = whittaker_space(m, degree);
            std::cout << "dim " << basis.size() << '\n';
            for (const auto& v : basis)
                std::cout << to_string(v) << '\n';
            return 0;
        }
        if (*closure) {
            const TModule m = make_module(lambda_text, type_text);
            if (seed_index >= static_cast<int>(m.gl2().dim()))
                throw InputError("--seed-index exceeds dim V - 1");
            const LocElement x = sbarlab::eval_loc(*parse_or_throw(seed_expr));
            const TVector seed = m.act(x, m.basis_vector({0, 0}, seed_index));
            if (seed.is_zero())
                throw InputError("seed vector is zero");
            std::cout << "seed " << to_string(seed) << '\n';
            print_rows(closure_probe(m, seed, degree, gen_degree));
            return 0;
        }
        if (*freeness) {
            const auto r = uh_freeness_check(TModule(1, 1, parse_lambda(lambda_text)), degree);
            std::cout << "monomials " << r.monomials << "  dim V " << r.dim_v << "  rank " << r.rank
                      << (r.full_rank() ? "  full" : "  deficient") << '\n';
            return r.full_rank() ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const sbarlab::EvalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

// Command-line driver: builds the complexes, runs the verification suite,
// expands the Betti series, lists generators, and emits any constructed
// object in the canonical text or JSON form.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 bad
// arguments.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "derres/bar.hpp"
#include "derres/coker.hpp"
#include "derres/determinantal.hpp"
#include "derres/emit.hpp"
#include "derres/hilbert_burch.hpp"
#include "derres/suite.hpp"

namespace {

struct CommonArgs {
    int n = 2;
    int degree = 4;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t prime = 2147483647ull;
    int trials = 5;
};

int run_build(const CommonArgs& args) {
    derres::GenericMatrix g = derres::build_generic(args.n);
    derres::HilbertBurchAlgebra alg = derres::build_hilbert_burch(g);
    derres::CokernelResolution coker = derres::build_coker_resolution(g);
    derres::BarResolution bar(g, alg, coker);
    nlohmann::json summary{
        {"n", args.n},
        {"minors", args.n + 1},
        {"algebra_ranks", {1, args.n + 1, args.n}},
        {"module_ranks", {args.n + 1, args.n * (args.n + 1), (args.n - 1) * (args.n + 1)}},
        {"bar_term_ranks", nlohmann::json::array()}};
    for (int r = 0; r <= args.degree; ++r)
        summary["bar_term_ranks"].push_back(bar.term_basis(r).size());
    if (args.format == "json") {
        std::cout << summary.dump(2) << "\n";
    } else {
        std::cout << "n = " << args.n << "\n"
                  << "algebra ranks: 1 " << args.n + 1 << " " << args.n << "\n"
                  << "module ranks: " << args.n + 1 << " " << args.n * (args.n + 1) << " "
                  << (args.n - 1) * (args.n + 1) << "\n"
                  << "bar term ranks:";
        for (int r = 0; r <= args.degree; ++r) std::cout << " " << bar.term_basis(r).size();
        std::cout << "\n";
    }
    return 0;
}

int run_verify(const CommonArgs& args, bool scoped) {
    derres::SuiteOptions options;
    options.prime = args.prime;
    options.trials = args.trials;
    options.seed = args.seed;

    if (!scoped) {
        std::vector<derres::CriterionOutcome> outcomes = derres::run_acceptance(options);
        if (args.format == "json")
            std::cout << derres::outcomes_json(outcomes).dump(2) << "\n";
        else
            derres::print_outcomes(std::cout, outcomes);
        return derres::all_passed(outcomes) ? 0 : 1;
    }

    derres::VerificationReport report = derres::run_scoped_verify(args.n, args.degree, options);
    if (args.format == "json") {
        nlohmann::json out{{"n", args.n},
                           {"degree", args.degree},
                           {"seed", args.seed},
                           {"prime", args.prime},
                           {"checks", report.to_json()}};
        std::cout << out.dump(2) << "\n";
    } else {
        report.print_text(std::cout);
        std::cout << (report.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

int run_betti(const CommonArgs& args) {
    std::vector<mpz_class> coeffs = derres::poincare_coefficients(args.n, args.degree);
    if (args.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : coeffs) arr.push_back(c.get_str());
        std::cout << nlohmann::json{{"n", args.n}, {"coefficients", arr}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        std::cout << (i ? " " : "") << coeffs[i].get_str();
    std::cout << "\n";
    return 0;
}

int run_generators(const CommonArgs& args) {
    std::cout << derres::emit_object("generators", args.n, args.format);
    return 0;
}

int run_emit(const CommonArgs& args, const std::string& object) {
    std::cout << derres::emit_object(object, args.n, args.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and verification for derivation-module resolutions "
                 "of maximal-minor determinantal rings"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string object;
    bool n_given = false;

    auto add_common = [&](CLI::App* cmd, bool with_degree) {
        cmd->add_option("--n", args.n, "matrix size parameter (n >= 2)")
            ->check(CLI::Range(2, 64))
            ->each([&](const std::string&) { n_given = true; });
        if (with_degree)
            cmd->add_option("--degree", args.degree, "homological degree limit")
                ->check(CLI::Range(1, 64));
        cmd->add_option("--format", args.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", args.seed, "random seed for probabilistic checks");
        cmd->add_option("--prime", args.prime, "prime for specializations (> 2^30)")
            ->check(CLI::Range(std::uint64_t(1) << 30, std::uint64_t(1) << 62));
        cmd->add_option("--trials", args.trials, "rank probe trials")->check(CLI::Range(1, 1000));
    };

    CLI::App* build = app.add_subcommand("build", "construct all complexes and print their ranks");
    add_common(build, true);
    CLI::App* verify = app.add_subcommand(
        "verify", "run the verification suite (full suite without --n, scoped with --n)");
    add_common(verify, true);
    CLI::App* betti = app.add_subcommand("betti", "expand the Betti number series");
    add_common(betti, true);
    CLI::App* generators = app.add_subcommand("generators", "list the derivation generators");
    add_common(generators, false);
    CLI::App* emit = app.add_subcommand("emit", "emit a constructed object");
    add_common(emit, false);
    emit->add_option("--object", object,
                     "X | minors | jacobian | hilbert-burch | partial2 | U | bar:<r> | generators")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return run_build(args);
        if (verify->parsed()) return run_verify(args, n_given);
        if (betti->parsed()) return run_betti(args);
        if (generators->parsed()) return run_generators(args);
        if (emit->parsed()) return run_emit(args, object);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

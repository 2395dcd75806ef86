#include "derres/suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "derres/bar.hpp"
#include "derres/coker.hpp"
#include "derres/determinantal.hpp"
#include "derres/emit.hpp"
#include "derres/golden.hpp"
#include "derres/hilbert_burch.hpp"

namespace derres {

namespace {

struct Workspace {
    GenericMatrix g;
    HilbertBurchAlgebra alg;
    CokernelResolution coker;
    BarResolution bar;

    explicit Workspace(int n)
        : g(build_generic(n)),
          alg(build_hilbert_burch(g)),
          coker(build_coker_resolution(g)),
          bar(g, alg, coker) {}
};

class SuiteRunner {
public:
    explicit SuiteRunner(const SuiteOptions& options) : options_(options) {
        if (options_.points < 20) options_.points = 20;
    }

    Workspace& ws(int n) {
        auto it = spaces_.find(n);
        if (it == spaces_.end()) it = spaces_.emplace(n, std::make_unique<Workspace>(n)).first;
        return *it->second;
    }

    const SuiteOptions& options() const { return options_; }

    CriterionOutcome run(int index, const std::string& name, double budget,
                         const std::function<void(std::vector<std::string>&)>& body) {
        CriterionOutcome outcome;
        outcome.index = index;
        outcome.name = name;
        outcome.budget_seconds = budget;
        auto start = std::chrono::steady_clock::now();
        try {
            body(outcome.details);
        } catch (const std::exception& e) {
            outcome.details.push_back(std::string("exception: ") + e.what());
        }
        outcome.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcome.passed = outcome.details.empty();
        if (budget > 0 && outcome.seconds > budget) {
            outcome.passed = false;
            std::ostringstream os;
            os << "runtime " << outcome.seconds << " s exceeds budget " << budget << " s";
            outcome.details.push_back(os.str());
        }
        return outcome;
    }

private:
    SuiteOptions options_;
    std::map<int, std::unique_ptr<Workspace>> spaces_;
};

void expect_report(const VerificationReport& report, std::vector<std::string>& details,
                   const std::string& context) {
    for (const auto& check : report.checks()) {
        if (check.passed()) continue;
        std::string line = context + ": " + check.check;
        if (!check.witnesses.empty()) line += " [" + check.witnesses.front() + "]";
        details.push_back(line);
    }
}

void expect(bool condition, std::vector<std::string>& details, const std::string& message) {
    if (!condition) details.push_back(message);
}

// Certifies that the block-diagonal witness minor of the second differential
// is nonzero by finding a specialization of full rank.
bool witness_minor_nonzero(const GenericMatrix& g, const std::vector<std::size_t>& rows,
                           const SuiteOptions& options) {
    PolyMatrix d2 = build_partial2(g);
    std::vector<std::size_t> cols(d2.cols());
    for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
    PolyMatrix square = d2.select(rows, cols);
    RankProbe probe = rank_probe(square, options.prime, options.trials, options.seed + 17);
    return probe.max_rank == square.rows();
}

std::vector<std::size_t> canonical_witness_rows(int n) {
    std::vector<std::size_t> rows;
    for (int r = 1; r <= n - 1; ++r) rows.push_back(static_cast<std::size_t>(r) - 1);
    for (int k = 2; k <= n; ++k)
        for (int r = 1; r <= n; ++r)
            rows.push_back(static_cast<std::size_t>(k - 1) * (n + 1) + r - 1);
    return rows;
}

}  // namespace

std::vector<CriterionOutcome> run_acceptance(const SuiteOptions& options) {
    SuiteRunner runner(options);
    std::vector<CriterionOutcome> outcomes;

    outcomes.push_back(runner.run(1, "golden matrices (jacobian n=2, partial2 n=3, bar d2 n=2)", 1.0,
        [&](std::vector<std::string>& details) {
            expect(emit_object("jacobian", 2, "text") == golden::jacobian_n2, details,
                   "jacobian n=2 differs from the reference text");
            expect(emit_object("partial2", 3, "text") == golden::partial2_n3, details,
                   "partial2 n=3 differs from the reference text");
            expect(emit_object("bar:2", 2, "text") == golden::bar2_n2, details,
                   "bar d2 n=2 differs from the reference text");
        }));

    outcomes.push_back(runner.run(2, "complex conditions over the ambient ring (n=2,3,4)", 10.0,
        [&](std::vector<std::string>& details) {
            for (int n = 2; n <= 4; ++n) {
                Workspace& w = runner.ws(n);
                expect_report(compose_check(w.alg.complex), details, "n=" + std::to_string(n));
                expect_report(compose_check(w.coker.complex), details, "n=" + std::to_string(n));
                expect_report(partial2_derivation_check(w.g), details, "n=" + std::to_string(n));
            }
        }));

    outcomes.push_back(runner.run(3, "minor/partial identity suite (n=2,3,4)", 0,
        [&](std::vector<std::string>& details) {
            for (int n = 2; n <= 4; ++n) {
                Workspace& w = runner.ws(n);
                expect_report(check_identities(w.g), details, "n=" + std::to_string(n));
                VerificationReport dga = verify_dga(w.alg, w.g);
                for (const auto& check : dga.checks())
                    if (check.check.find("partial-derivative form") != std::string::npos &&
                        !check.passed())
                        details.push_back("n=" + std::to_string(n) + ": " + check.check);
            }
        }));

    outcomes.push_back(runner.run(4, "dg algebra axioms (n=2,3,4) and dg module axioms (n=2,3)", 120.0,
        [&](std::vector<std::string>& details) {
            for (int n = 2; n <= 4; ++n) {
                Workspace& w = runner.ws(n);
                expect_report(verify_dga(w.alg, w.g), details, "n=" + std::to_string(n));
            }
            for (int n = 2; n <= 3; ++n) {
                Workspace& w = runner.ws(n);
                expect_report(verify_dg_module(w.coker, w.alg), details, "n=" + std::to_string(n));
            }
        }));

    outcomes.push_back(runner.run(5, "golod conditions for the ring and the module (n=2,3,4)", 0,
        [&](std::vector<std::string>& details) {
            for (int n = 2; n <= 4; ++n) {
                Workspace& w = runner.ws(n);
                expect_report(golod_condition_ring(w.alg), details, "n=" + std::to_string(n));
                expect_report(golod_condition_module(w.coker, w.alg), details,
                              "n=" + std::to_string(n));
            }
        }));

    outcomes.push_back(runner.run(6, "rank probes and rank additivity (n=2,3,4)", 0,
        [&](std::vector<std::string>& details) {
            const SuiteOptions& opt = runner.options();
            for (int n = 2; n <= 4; ++n) {
                Workspace& w = runner.ws(n);
                const std::size_t jt_rank = static_cast<std::size_t>(n) + 1;
                const std::size_t d2_rank = static_cast<std::size_t>(n - 1) * (n + 1);

                RankProbe jt = rank_probe(w.coker.complex.diff(1), opt.prime, opt.trials, opt.seed + n);
                expect(jt.max_rank == jt_rank && jt.all_trials_hit(jt_rank), details,
                       "n=" + std::to_string(n) + ": jacobian rank probe missed " +
                           std::to_string(jt_rank));
                RankProbe d2 = rank_probe(w.coker.complex.diff(2), opt.prime, opt.trials,
                                          opt.seed + 100 + n);
                expect(d2.max_rank == d2_rank && d2.all_trials_hit(d2_rank), details,
                       "n=" + std::to_string(n) + ": partial2 rank probe missed " +
                           std::to_string(d2_rank));

                expect_report(be_condition_one(w.coker.complex, {jt.max_rank, d2.max_rank}),
                              details, "n=" + std::to_string(n));

                RankProbe phi1 = rank_probe(w.alg.complex.diff(1), opt.prime, opt.trials,
                                            opt.seed + 200 + n);
                RankProbe phi2 = rank_probe(w.alg.complex.diff(2), opt.prime, opt.trials,
                                            opt.seed + 300 + n);
                expect(phi1.max_rank == 1 && phi2.max_rank == static_cast<std::size_t>(n), details,
                       "n=" + std::to_string(n) + ": hilbert-burch rank probes missed");
                expect_report(be_condition_one(w.alg.complex, {phi1.max_rank, phi2.max_rank}),
                              details, "n=" + std::to_string(n));

                expect(witness_minor_nonzero(w.g, canonical_witness_rows(n), opt), details,
                       "n=" + std::to_string(n) + ": block-diagonal witness minor vanished");
                // grade bounds themselves are outside computational scope and
                // are taken as given; only the witness minor is certified
            }
            Workspace& w3 = runner.ws(3);
            expect(witness_minor_nonzero(w3.g, {0, 2, 4, 5, 6, 8, 10, 11}, opt), details,
                   "n=3: printed witness minor vanished");
        }));

    outcomes.push_back(runner.run(7, "bar resolution composes to zero modulo the ideal", 300.0,
        [&](std::vector<std::string>& details) {
            const SuiteOptions& opt = runner.options();
            expect_report(verify_bar(runner.ws(2).bar, 5, opt.prime, opt.points, opt.seed),
                          details, "n=2");
            expect_report(verify_bar(runner.ws(3).bar, 4, opt.prime, opt.points, opt.seed),
                          details, "n=3");
        }));

    outcomes.push_back(runner.run(8, "betti numbers match the rational series (n=2,3)", 0,
        [&](std::vector<std::string>& details) {
            for (int n = 2; n <= 3; ++n) {
                Workspace& w = runner.ws(n);
                std::vector<mpz_class> series = poincare_coefficients(n, 4);
                for (int r = 0; r <= 4; ++r) {
                    mpz_class rank(static_cast<long>(w.bar.term_basis(r + 2).size()));
                    expect(rank == series[static_cast<std::size_t>(r)], details,
                           "n=" + std::to_string(n) + ": bar term rank at degree " +
                               std::to_string(r + 2) + " is " + rank.get_str() + ", series says " +
                               series[static_cast<std::size_t>(r)].get_str());
                }
            }
            std::vector<mpz_class> expected = {mpz_class(12), mpz_class(24), mpz_class(48),
                                               mpz_class(96), mpz_class(192)};
            expect(poincare_coefficients(2, 4) == expected, details,
                   "n=2 series is not 12 24 48 96 192");
        }));

    outcomes.push_back(runner.run(9, "generator extraction and euler identity (n=2..5)", 0,
        [&](std::vector<std::string>& details) {
            for (int n = 2; n <= 5; ++n) {
                Workspace& w = runner.ws(n);
                DerivationPresentation pres = truncate_to_der(w.bar);
                const std::size_t expected = 2ull * n * (n + 1);
                expect(pres.generators.size() == expected, details,
                       "n=" + std::to_string(n) + ": generator count " +
                           std::to_string(pres.generators.size()) + " != " +
                           std::to_string(expected));
                for (const auto& gen : pres.generators)
                    for (int r = 1; r <= n + 1; ++r) {
                        Polynomial value = gen.apply(w.g.minor(r));
                        if (!value.is_zero() && !normal_form(value, w.g.ideal_gens()).is_zero())
                            details.push_back("n=" + std::to_string(n) + ": " + gen.name +
                                              " does not annihilate F[" + std::to_string(r) +
                                              "] modulo the ideal");
                    }
                expect_report(euler_identity(w.g), details, "n=" + std::to_string(n));
            }
        }));

    outcomes.push_back(runner.run(10, "linearity of the resolution at n=2 through degree 5", 0,
        [&](std::vector<std::string>& details) {
            expect_report(linearity_check(runner.ws(2).bar, 5), details, "n=2");
        }));

    outcomes.push_back(runner.run(11, "cokernel descent column combinations (n=2,3)", 0,
        [&](std::vector<std::string>& details) {
            for (int n = 2; n <= 3; ++n)
                expect_report(coker_descent_check(runner.ws(n).g), details,
                              "n=" + std::to_string(n));
        }));

    return outcomes;
}

bool all_passed(const std::vector<CriterionOutcome>& outcomes) {
    for (const auto& o : outcomes)
        if (!o.passed) return false;
    return true;
}

void print_outcomes(std::ostream& os, const std::vector<CriterionOutcome>& outcomes) {
    for (const auto& o : outcomes) {
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << o.seconds;
        os << (o.passed ? "PASS" : "FAIL") << " criterion " << o.index << ": " << o.name << " ("
           << time.str() << " s)\n";
        for (const auto& d : o.details) os << "     " << d << "\n";
    }
}

nlohmann::json outcomes_json(const std::vector<CriterionOutcome>& outcomes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& o : outcomes)
        arr.push_back({{"criterion", o.index},
                       {"name", o.name},
                       {"status", o.passed ? "pass" : "fail"},
                       {"seconds", o.seconds},
                       {"details", o.details}});
    return arr;
}

VerificationReport run_scoped_verify(int n, int degree, const SuiteOptions& options) {
    if (degree < 1) throw std::invalid_argument("verify: degree must be at least 1");
    SuiteOptions opt = options;
    if (opt.points < 20) opt.points = 20;

    Workspace w(n);
    VerificationReport report;
    report.append(check_identities(w.g));
    report.append(compose_check(w.alg.complex));
    report.append(compose_check(w.coker.complex));
    report.append(partial2_derivation_check(w.g));
    report.append(verify_dga(w.alg, w.g));
    report.append(verify_dg_module(w.coker, w.alg));
    report.append(golod_condition_ring(w.alg));
    report.append(coker_descent_check(w.g));
    report.append(euler_identity(w.g));

    {
        auto& probes = report.add("rank probes match the closed forms",
                                  {{"n", n}, {"prime", opt.prime}, {"trials", opt.trials}});
        probes.seed = opt.seed;
        RankProbe jt = rank_probe(w.coker.complex.diff(1), opt.prime, opt.trials, opt.seed + n);
        RankProbe d2 = rank_probe(w.coker.complex.diff(2), opt.prime, opt.trials, opt.seed + 100 + n);
        if (!jt.certifies(static_cast<std::size_t>(n) + 1))
            record_failure(probes, "jacobian rank probe returned " + std::to_string(jt.max_rank));
        if (!d2.certifies(static_cast<std::size_t>(n - 1) * (n + 1)))
            record_failure(probes, "partial2 rank probe returned " + std::to_string(d2.max_rank));
        report.append(be_condition_one(w.coker.complex, {jt.max_rank, d2.max_rank}));
        RankProbe phi1 = rank_probe(w.alg.complex.diff(1), opt.prime, opt.trials, opt.seed + 200 + n);
        RankProbe phi2 = rank_probe(w.alg.complex.diff(2), opt.prime, opt.trials, opt.seed + 300 + n);
        report.append(be_condition_one(w.alg.complex, {phi1.max_rank, phi2.max_rank}));

        // The grade bounds in the acyclicity criterion are outside
        // computational scope; only the block-diagonal witness minor is
        // certified nonzero, the bounds themselves are taken as given.
        auto& grade = report.add("acyclicity grade bounds", {{"n", n}});
        grade.status = "assumed";
        if (!witness_minor_nonzero(w.g, canonical_witness_rows(n), opt))
            record_failure(grade, "block-diagonal witness minor vanished");
    }

    if (degree >= 2) report.append(verify_bar(w.bar, degree, opt.prime, opt.points, opt.seed));

    {
        auto& betti = report.add("bar term ranks match the rational series", {{"n", n}});
        std::vector<mpz_class> series = poincare_coefficients(n, std::max(0, degree - 2));
        for (int r = 0; r + 2 <= degree; ++r) {
            mpz_class rank(static_cast<long>(w.bar.term_basis(r + 2).size()));
            if (rank != series[static_cast<std::size_t>(r)])
                record_failure(betti, "rank at degree " + std::to_string(r + 2) + " is " +
                                          rank.get_str());
        }
    }

    {
        auto& gens = report.add("generators annihilate the minors modulo the ideal", {{"n", n}});
        DerivationPresentation pres = truncate_to_der(w.bar);
        if (pres.generators.size() != 2ull * n * (n + 1))
            record_failure(gens, "generator count " + std::to_string(pres.generators.size()));
        for (const auto& gen : pres.generators)
            for (int r = 1; r <= n + 1; ++r) {
                Polynomial value = gen.apply(w.g.minor(r));
                if (!value.is_zero() && !normal_form(value, w.g.ideal_gens()).is_zero())
                    record_failure(gens, gen.name + " fails on F[" + std::to_string(r) + "]");
            }
    }

    if (n == 2) report.append(linearity_check(w.bar, std::max(degree, 2)));
    return report;
}

}  // namespace derres

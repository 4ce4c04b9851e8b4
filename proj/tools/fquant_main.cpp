#include "fquant/asymptotics.hpp"
#include "fquant/axioms.hpp"
#include "fquant/errors.hpp"
#include "fquant/evaluate.hpp"
#include "fquant/problem_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using fquant::Strategy;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;     // generic failure / failed checks
constexpr int kExitParse = 2;       // bad input file
constexpr int kExitSizeGuard = 3;   // exact evaluator guard tripped
constexpr int kExitEvaluator = 4;   // evaluator cannot handle the kernel

int command_evaluate(const std::string& file, const std::string& strategy_override, bool as_json) {
    fquant::Problem problem = fquant::load_problem(file);
    Strategy strategy = problem.strategy;
    if (!strategy_override.empty()) {
        strategy = fquant::strategy_from_string(strategy_override);
    }
    const std::vector<fquant::FuzzySet> args = problem.resolve_arguments();
    const fquant::EvalResult r = fquant::evaluate(problem.quantifier, args, strategy);
    if (as_json) {
        nlohmann::json out;
        out["value"] = r.value;
        out["evaluator"] = fquant::to_string(r.evaluator_used);
        out["elapsed_seconds"] = r.elapsed_seconds;
        out["approximate"] = r.approximate;
        out["degenerate"] = r.degenerate;
        out["quantifier"] = problem.quantifier.name();
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("value=%.6f evaluator=%s elapsed_ms=%.3f%s\n", r.value,
                    fquant::to_string(r.evaluator_used), r.elapsed_seconds * 1e3,
                    r.approximate ? " (approximate)" : "");
    }
    return kExitOk;
}

int command_check(const std::string& suite, bool as_json, std::uint64_t seed) {
    fquant::CheckConfig cfg;
    cfg.seed = seed;
    const std::vector<fquant::CheckReport> reports = fquant::run_checks(cfg, suite);
    bool all_passed = true;
    if (as_json) {
        nlohmann::json out;
        out["suite"] = suite;
        out["seed"] = seed;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : reports) {
            all_passed = all_passed && r.passed;
            checks.push_back({{"name", r.name},
                              {"suite", r.suite},
                              {"passed", r.passed},
                              {"skipped", r.skipped},
                              {"max_violation", r.max_violation},
                              {"tolerance", r.tolerance},
                              {"instances", r.instances},
                              {"witnesses", r.witnesses}});
        }
        out["checks"] = std::move(checks);
        out["all_passed"] = all_passed;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            all_passed = all_passed && r.passed;
            std::printf("[%s] %-32s max_violation=%.3e tol=%.0e instances=%zu%s\n",
                        r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_violation, r.tolerance,
                        r.instances, r.skipped ? " (skipped)" : "");
            for (const auto& w : r.witnesses) {
                std::printf("       witness: %s\n", w.c_str());
            }
        }
        std::printf("%s\n", all_passed ? "all checks passed" : "CHECKS FAILED");
    }
    return all_passed ? kExitOk : kExitFailure;
}

int command_temporal(const std::string& file, bool as_json) {
    const fquant::TemporalProblem p = fquant::load_temporal(file);
    const fquant::TemporalResult r =
        fquant::temporal_quantify(p.signal, p.label, p.quantifier, p.grid);
    if (as_json) {
        nlohmann::json out;
        out["grid"] = r.grid;
        out["limit_value"] = r.limit_value;
        if (r.dp_value) {
            out["dp_value"] = *r.dp_value;
        } else {
            out["dp_value"] = nullptr;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        if (r.dp_value) {
            std::printf("dp_value=%.6f limit_value=%.6f grid=%zu\n", *r.dp_value, r.limit_value,
                        r.grid);
        } else {
            std::printf("dp_value=n/a limit_value=%.6f grid=%zu\n", r.limit_value, r.grid);
        }
    }
    return kExitOk;
}

int command_population(const std::string& file, bool as_json) {
    const fquant::PopulationProblem p = fquant::load_population(file);
    const fquant::PopulationResult r = fquant::population_quantify(p.samples, p.label, p.quantifier);
    if (as_json) {
        nlohmann::json out;
        out["limit_value"] = r.limit_value;
        out["fuzzy_event_probability"] = r.fuzzy_event_probability;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("limit_value=%.6f fuzzy_event_probability=%.6f\n", r.limit_value,
                    r.fuzzy_event_probability);
    }
    return kExitOk;
}

/// Cross-validates the polynomial evaluators against the exact sum on random
/// instances and reports timing. Binary rows appear only while the exact
/// reference stays within its size guard (2m <= 24).
int command_bench(std::size_t m_min, std::size_t m_max, std::size_t trials, std::uint64_t seed) {
    using clock = std::chrono::steady_clock;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto random_set = [&](const fquant::Universe& u) {
        std::vector<double> g(u.size());
        for (double& v : g) v = unit(rng);
        return fquant::FuzzySet(u, std::move(g));
    };

    std::printf("m,evaluator,mean_elapsed,max_abs_diff\n");
    for (std::size_t m = m_min; m <= m_max; ++m) {
        const fquant::Universe u(m);

        if (m <= fquant::kExactGuardBits) {
            double exact_elapsed = 0.0;
            double dp_elapsed = 0.0;
            double max_diff = 0.0;
            for (std::size_t t = 0; t < trials; ++t) {
                std::vector<double> table(m + 1);
                for (double& v : table) v = unit(rng);
                const auto q = fquant::make_unary_quantitative("bench_unary", u, table);
                const fquant::FuzzySet x = random_set(u);

                auto t0 = clock::now();
                const double exact = fquant::eval_exact(q, x);
                auto t1 = clock::now();
                const double dp = fquant::eval_unary_dp(q, x);
                auto t2 = clock::now();
                exact_elapsed += std::chrono::duration<double>(t1 - t0).count();
                dp_elapsed += std::chrono::duration<double>(t2 - t1).count();
                max_diff = std::max(max_diff, std::abs(exact - dp));
            }
            std::printf("%zu,exact_unary,%.9e,0\n", m, exact_elapsed / trials);
            std::printf("%zu,dp_unary,%.9e,%.3e\n", m, dp_elapsed / trials, max_diff);
        }

        if (2 * m <= fquant::kExactGuardBits) {
            double exact_elapsed = 0.0;
            double dp_elapsed = 0.0;
            double max_diff = 0.0;
            for (std::size_t t = 0; t < trials; ++t) {
                const double alpha = 0.8 * unit(rng);
                const double gamma = alpha + 0.05 + 0.15 * unit(rng);
                const auto q = fquant::make_binary_proportional(
                    "bench_binary", u, fquant::FuzzyNumber::smooth_step(alpha, gamma), unit(rng));
                const fquant::FuzzySet x1 = random_set(u);
                const fquant::FuzzySet x2 = random_set(u);

                auto t0 = clock::now();
                const double exact = fquant::eval_exact(q, x1, x2);
                auto t1 = clock::now();
                const double dp = fquant::eval_binary_proportional_dp(q, x1, x2);
                auto t2 = clock::now();
                exact_elapsed += std::chrono::duration<double>(t1 - t0).count();
                dp_elapsed += std::chrono::duration<double>(t2 - t1).count();
                max_diff = std::max(max_diff, std::abs(exact - dp));
            }
            std::printf("%zu,exact_binary,%.9e,0\n", m, exact_elapsed / trials);
            std::printf("%zu,dp_binary,%.9e,%.3e\n", m, dp_elapsed / trials, max_diff);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluation of fuzzy quantified sentences over finite universes"};
    app.require_subcommand(1);

    std::string file;
    std::string strategy;
    std::string suite = "all";
    std::string m_range = "2:12";
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    bool as_json = false;

    auto* cmd_eval = app.add_subcommand("evaluate", "evaluate a problem file");
    cmd_eval->add_option("file", file, "problem file (JSON)")->required();
    cmd_eval->add_option("--strategy", strategy, "auto|exact|dp|limit (overrides the file)")
        ->check(CLI::IsMember({"auto", "exact", "dp", "limit"}));
    cmd_eval->add_flag("--json", as_json, "emit the full result record as JSON");

    auto* cmd_check = app.add_subcommand("check", "run the law-verification suite");
    cmd_check->add_option("--suite", suite, "all|Z|P")->check(CLI::IsMember({"all", "Z", "P"}));
    cmd_check->add_option("--seed", seed, "seed for the randomized probes (default 0)");
    cmd_check->add_flag("--json", as_json, "emit a machine-readable report");

    auto* cmd_temporal = app.add_subcommand("temporal", "quantify a sampled signal over time");
    cmd_temporal->add_option("file", file, "temporal file (JSON)")->required();
    cmd_temporal->add_flag("--json", as_json, "emit the result as JSON");

    auto* cmd_population =
        app.add_subcommand("population", "quantify a population given by samples");
    cmd_population->add_option("file", file, "population file (JSON)")->required();
    cmd_population->add_flag("--json", as_json, "emit the result as JSON");

    auto* cmd_bench = app.add_subcommand("bench", "cross-validate exact vs DP, emit CSV");
    cmd_bench->add_option("--m-range", m_range, "universe sizes min:max (default 2:12)");
    cmd_bench->add_option("--trials", trials, "random instances per size (default 20)");
    cmd_bench->add_option("--seed", seed, "RNG seed (default 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_eval->parsed()) return command_evaluate(file, strategy, as_json);
        if (cmd_check->parsed()) return command_check(suite, as_json, seed);
        if (cmd_temporal->parsed()) return command_temporal(file, as_json);
        if (cmd_population->parsed()) return command_population(file, as_json);
        if (cmd_bench->parsed()) {
            const auto colon = m_range.find(':');
            if (colon == std::string::npos) {
                throw fquant::ParseError("--m-range: expected min:max");
            }
            const std::size_t m_min = std::stoul(m_range.substr(0, colon));
            const std::size_t m_max = std::stoul(m_range.substr(colon + 1));
            if (m_min == 0 || m_max < m_min) {
                throw fquant::ParseError("--m-range: expected 1 <= min <= max");
            }
            return command_bench(m_min, m_max, trials, seed);
        }
    } catch (const fquant::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const fquant::SizeGuardError& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const fquant::EvaluatorMismatchError& e) {
        std::cerr << "evaluator mismatch: " << e.what() << "\n";
        return kExitEvaluator;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

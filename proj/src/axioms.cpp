#include "fquant/axioms.hpp"

#include "fquant/algebra.hpp"
#include "fquant/evaluate.hpp"
#include "fquant/fuzzy_set.hpp"
#include "fquant/quantifier.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

namespace fquant {

namespace {

// Fixed per-check RNG salts keep every report reproducible for a given seed.
constexpr std::uint64_t kSaltZ2 = 0x1b2;
constexpr std::uint64_t kSaltZ3 = 0x1b3;
constexpr std::uint64_t kSaltZ4 = 0x1b4;
constexpr std::uint64_t kSaltZ5 = 0x1b5;
constexpr std::uint64_t kSaltZ6 = 0x1b6;
constexpr std::uint64_t kSaltNeg = 0x2a1;
constexpr std::uint64_t kSaltQMono = 0x2a2;
constexpr std::uint64_t kSaltCont = 0x2a3;
constexpr std::uint64_t kSaltInsert = 0x2a4;
constexpr std::uint64_t kSaltIdentity = 0x2a5;
constexpr std::uint64_t kSaltRuspini = 0x2a6;

/// Grades quantized to multiples of 0.05 so witnesses print exactly.
FuzzySet random_fuzzy(std::mt19937_64& rng, const Universe& u) {
    std::uniform_int_distribution<int> d(0, 20);
    std::vector<double> g(u.size());
    for (double& v : g) v = d(rng) / 20.0;
    return FuzzySet(u, std::move(g));
}

std::string show(const FuzzySet& x) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%.2f", x.grade(i));
        os << (i ? "," : "") << buf;
    }
    os << "]";
    return os.str();
}

class Recorder {
public:
    Recorder(std::string name, std::string suite, double tolerance) {
        report_.name = std::move(name);
        report_.suite = std::move(suite);
        report_.tolerance = tolerance;
    }

    void observe(double violation, const std::function<std::string()>& witness) {
        ++report_.instances;
        if (violation > report_.max_violation) report_.max_violation = violation;
        if (violation > report_.tolerance && report_.witnesses.size() < 3) {
            report_.witnesses.push_back(witness());
        }
    }

    CheckReport finish() {
        report_.passed = report_.max_violation <= report_.tolerance;
        return report_;
    }

    CheckReport skip() {
        report_.skipped = true;
        report_.passed = true;
        return report_;
    }

private:
    CheckReport report_;
};

std::vector<SemiFuzzyQuantifier> unary_inventory(const Universe& u) {
    std::vector<SemiFuzzyQuantifier> qs;
    qs.push_back(make_exists(u));
    qs.push_back(make_forall(u));
    if (u.size() > 0) qs.push_back(make_identity(u));
    return qs;
}

SemiFuzzyQuantifier make_nearly_all(const Universe& u) {
    // max(2*ratio - 1, 0): a ramp from one half to one.
    return make_binary_proportional("nearly_all", u, FuzzyNumber::trapezoid(0.5, 1.0, 1.0, 1.0),
                                    1.0);
}

std::vector<SemiFuzzyQuantifier> binary_inventory(const Universe& u) {
    std::vector<SemiFuzzyQuantifier> qs;
    qs.push_back(make_all(u));
    qs.push_back(make_some(u));
    qs.push_back(make_no(u));
    qs.push_back(make_nearly_all(u));
    qs.push_back(make_binary_proportional("at_least_about_80pct", u,
                                          FuzzyNumber::smooth_step(0.5, 0.8), 1.0));
    for (auto& q : make_ruspini_partition(u)) qs.push_back(std::move(q));
    return qs;
}

std::vector<FuzzySet> crisp_tuple(const Universe& u, std::size_t arity, std::size_t index) {
    std::vector<FuzzySet> xs;
    const std::size_t span = std::size_t{1} << u.size();
    for (std::size_t a = 0; a < arity; ++a) {
        xs.push_back(FuzzySet::crisp(CrispSet::from_mask(u, index % span)));
        index /= span;
    }
    return xs;
}

std::vector<CrispSet> crisp_args(const Universe& u, std::size_t arity, std::size_t index) {
    std::vector<CrispSet> ys;
    const std::size_t span = std::size_t{1} << u.size();
    for (std::size_t a = 0; a < arity; ++a) {
        ys.push_back(CrispSet::from_mask(u, index % span));
        index /= span;
    }
    return ys;
}

// Shared engine for the internal-joins law, parameterized on the fuzzy
// union/intersection pair so the discrimination variant can swap in min.
CheckReport run_internal_joins(const CheckConfig& cfg, std::string name, double tolerance,
                               const std::function<FuzzySet(const FuzzySet&, const FuzzySet&)>& fuzzy_union,
                               const std::function<FuzzySet(const FuzzySet&, const FuzzySet&)>& fuzzy_inter) {
    Recorder rec(std::move(name), "Z", tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltZ4);
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        std::vector<SemiFuzzyQuantifier> qs = unary_inventory(u);
        if (3 * m <= kExactGuardBits) {
            qs.push_back(make_all(u));
            qs.push_back(make_some(u));
        }
        // The all-halves pair maximally separates product from min.
        const FuzzySet halves(u, std::vector<double>(m, 0.5));
        for (const auto& q : qs) {
            const SemiFuzzyQuantifier q_union = union_arg(q);
            const SemiFuzzyQuantifier q_inter = intersection_arg(q);
            for (std::size_t probe = 0; probe <= cfg.probes; ++probe) {
                std::vector<FuzzySet> xs;
                for (std::size_t a = 0; a + 1 < q_union.arity(); ++a) {
                    xs.push_back(random_fuzzy(rng, u));
                }
                FuzzySet extra = probe == 0 ? halves : random_fuzzy(rng, u);
                if (probe == 0 && !xs.empty()) xs.back() = halves;

                std::vector<FuzzySet> lifted = xs;
                lifted.push_back(extra);
                const double lhs_u = eval_exact(q_union, lifted);
                const double lhs_i = eval_exact(q_inter, lifted);

                std::vector<FuzzySet> joined = xs;
                joined.back() = fuzzy_union(joined.back(), extra);
                const double rhs_u = eval_exact(q, joined);
                joined.back() = fuzzy_inter(xs.back(), extra);
                const double rhs_i = eval_exact(q, joined);

                const double viol = std::max(std::abs(lhs_u - rhs_u), std::abs(lhs_i - rhs_i));
                rec.observe(viol, [&] {
                    std::ostringstream os;
                    os << "Q=" << q.name() << " m=" << m << " Xn=" << show(xs.back())
                       << " Xn1=" << show(extra) << " union " << lhs_u << " vs " << rhs_u
                       << ", inter " << lhs_i << " vs " << rhs_i;
                    return os.str();
                });
            }
        }
    }
    return rec.finish();
}

}  // namespace

CheckReport check_Z1_correct_generalization(const CheckConfig& cfg) {
    Recorder rec("Z1_correct_generalization", "Z", 1e-12);
    if (cfg.max_m == 0) return rec.skip();
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        std::vector<SemiFuzzyQuantifier> qs = unary_inventory(u);
        for (auto& q : binary_inventory(u)) qs.push_back(std::move(q));
        for (const auto& q : qs) {
            const std::size_t tuples = std::size_t{1} << (q.arity() * m);
            for (std::size_t index = 0; index < tuples; ++index) {
                const std::vector<FuzzySet> xs = crisp_tuple(u, q.arity(), index);
                const std::vector<CrispSet> ys = crisp_args(u, q.arity(), index);
                const double fuzzy_value = eval_exact(q, xs);
                const double kernel_value = q(ys);
                rec.observe(std::abs(fuzzy_value - kernel_value), [&] {
                    std::ostringstream os;
                    os << "Q=" << q.name() << " m=" << m << " tuple=" << index << " fuzzified="
                       << fuzzy_value << " kernel=" << kernel_value;
                    return os.str();
                });
            }
        }
    }
    return rec.finish();
}

CheckReport check_Z2_projection(const CheckConfig& cfg) {
    Recorder rec("Z2_projection", "Z", 1e-12);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltZ2);
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        for (std::size_t e = 0; e < m; ++e) {
            const SemiFuzzyQuantifier pi = make_projection(u, e);
            for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
                const FuzzySet x = random_fuzzy(rng, u);
                const double lhs = eval_exact(pi, x);
                const double rhs = x.grade(e);
                rec.observe(std::abs(lhs - rhs), [&] {
                    std::ostringstream os;
                    os << "m=" << m << " e=" << e << " X=" << show(x) << " lhs=" << lhs
                       << " grade=" << rhs;
                    return os.str();
                });
            }
        }
    }
    return rec.finish();
}

CheckReport check_Z3_dualisation(const CheckConfig& cfg) {
    Recorder rec("Z3_dualisation", "Z", cfg.tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltZ3);
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        for (const auto& q : binary_inventory(u)) {
            const SemiFuzzyQuantifier q_dual = dual(q);
            for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
                const FuzzySet x1 = random_fuzzy(rng, u);
                const FuzzySet x2 = random_fuzzy(rng, u);
                const double lhs = eval_exact(q_dual, x1, x2);
                const double rhs = 1.0 - eval_exact(q, x1, complement(x2));
                rec.observe(std::abs(lhs - rhs), [&] {
                    std::ostringstream os;
                    os << "Q=" << q.name() << " m=" << m << " X1=" << show(x1)
                       << " X2=" << show(x2) << " lhs=" << lhs << " rhs=" << rhs;
                    return os.str();
                });
            }
        }
    }
    return rec.finish();
}

CheckReport check_Z4_internal_joins(const CheckConfig& cfg) {
    return run_internal_joins(cfg, "Z4_internal_joins", cfg.tolerance, union_probabilistic,
                              intersect_product);
}

CheckReport check_Z4_discrimination_min_tnorm(const CheckConfig& cfg) {
    // Replace the induced product by min; the law must now break visibly.
    CheckReport r = run_internal_joins(
        cfg, "Z4_discrimination_min_tnorm", 1e-3,
        [](const FuzzySet& a, const FuzzySet& b) {
            return complement(intersect_min(complement(a), complement(b)));
        },
        intersect_min);
    if (!r.skipped) {
        r.passed = r.max_violation >= 1e-3;
        r.witnesses.clear();  // the "violations" are the expected outcome here
    }
    return r;
}

CheckReport check_Z5_monotonicity(const CheckConfig& cfg) {
    Recorder rec("Z5_monotonicity", "Z", cfg.tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltZ5);
    std::uniform_int_distribution<int> bump(0, 3);
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        // (quantifier, argument index, +1 nondecreasing / -1 nonincreasing)
        std::vector<std::tuple<SemiFuzzyQuantifier, std::size_t, int>> cases;
        cases.emplace_back(make_exists(u), 0, +1);
        cases.emplace_back(make_forall(u), 0, +1);
        cases.emplace_back(make_identity(u), 0, +1);
        cases.emplace_back(make_some(u), 0, +1);
        cases.emplace_back(make_some(u), 1, +1);
        cases.emplace_back(make_all(u), 0, -1);
        cases.emplace_back(make_all(u), 1, +1);
        cases.emplace_back(make_no(u), 1, -1);
        for (const auto& [q, arg, direction] : cases) {
            for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
                std::vector<FuzzySet> xs;
                for (std::size_t a = 0; a < q.arity(); ++a) xs.push_back(random_fuzzy(rng, u));
                std::vector<FuzzySet> raised = xs;
                std::vector<double> g(raised[arg].grades().begin(), raised[arg].grades().end());
                for (double& v : g) v = std::min(1.0, v + 0.05 * bump(rng));
                raised[arg] = FuzzySet(u, std::move(g));
                const double before = eval_exact(q, xs);
                const double after = eval_exact(q, raised);
                const double viol = direction > 0 ? std::max(0.0, before - after)
                                                  : std::max(0.0, after - before);
                rec.observe(viol, [&, &q = q, &arg = arg] {
                    std::ostringstream os;
                    os << "Q=" << q.name() << " m=" << m << " arg=" << arg << " X="
                       << show(xs[arg]) << " raised=" << show(raised[arg]) << " before=" << before
                       << " after=" << after;
                    return os.str();
                });
            }
        }
    }
    return rec.finish();
}

CheckReport check_Z6_functional_application(const CheckConfig& cfg) {
    Recorder rec("Z6_functional_application", "Z", cfg.tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltZ6);
    const std::size_t bound = std::min<std::size_t>(cfg.max_m, 3);
    for (std::size_t md = 1; md <= bound; ++md) {      // |E'| (domain)
        for (std::size_t mc = 1; mc <= bound; ++mc) {  // |E| (codomain)
            const Universe domain(md);
            const Universe codomain(mc);
            const SemiFuzzyQuantifier ex = make_exists(codomain);
            const SemiFuzzyQuantifier some = make_some(codomain);
            std::size_t map_count = 1;
            for (std::size_t i = 0; i < md; ++i) map_count *= mc;
            std::uniform_int_distribution<std::size_t> pick(0, map_count - 1);

            auto nth_map = [&](std::size_t code) {
                std::vector<std::size_t> f(md);
                for (std::size_t i = 0; i < md; ++i) {
                    f[i] = code % mc;
                    code /= mc;
                }
                return f;
            };
            auto run_instance = [&](const SemiFuzzyQuantifier& q,
                                    const std::vector<std::vector<std::size_t>>& maps) {
                const SemiFuzzyQuantifier composed = compose_with_maps(q, maps, domain);
                std::vector<FuzzySet> xs;
                std::vector<FuzzySet> images;
                for (std::size_t a = 0; a < q.arity(); ++a) {
                    xs.push_back(random_fuzzy(rng, domain));
                    images.push_back(extension_principle(maps[a], xs.back(), codomain));
                }
                const double lhs = eval_exact(composed, xs);
                const double rhs = eval_exact(q, images);
                rec.observe(std::abs(lhs - rhs), [&] {
                    std::ostringstream os;
                    os << "Q=" << q.name() << " |E'|=" << md << " |E|=" << mc << " lhs=" << lhs
                       << " rhs=" << rhs;
                    return os.str();
                });
            };

            for (std::size_t code = 0; code < map_count; ++code) {
                run_instance(ex, {nth_map(code)});
                const auto f = nth_map(code);
                run_instance(some, {f, f});
            }
            for (std::size_t probe = 0; probe < cfg.probes / 5; ++probe) {
                run_instance(some, {nth_map(pick(rng)), nth_map(pick(rng))});
            }
        }
    }
    return rec.finish();
}

CheckReport check_external_internal_negation(const CheckConfig& cfg) {
    Recorder rec("P4_P5_negation", "P", cfg.tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltNeg);
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        std::vector<SemiFuzzyQuantifier> qs = unary_inventory(u);
        for (auto& q : binary_inventory(u)) qs.push_back(std::move(q));
        for (const auto& q : qs) {
            const SemiFuzzyQuantifier negated = external_negation(q);
            const SemiFuzzyQuantifier antonym = internal_negation(q);
            for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
                std::vector<FuzzySet> xs;
                for (std::size_t a = 0; a < q.arity(); ++a) xs.push_back(random_fuzzy(rng, u));
                const double base = eval_exact(q, xs);
                const double viol_ext = std::abs(eval_exact(negated, xs) - (1.0 - base));
                std::vector<FuzzySet> flipped = xs;
                flipped.back() = complement(flipped.back());
                const double viol_int = std::abs(eval_exact(antonym, xs) -
                                                 eval_exact(q, flipped));
                rec.observe(std::max(viol_ext, viol_int), [&, &q = q] {
                    std::ostringstream os;
                    os << "Q=" << q.name() << " m=" << m << " ext=" << viol_ext
                       << " int=" << viol_int;
                    return os.str();
                });
            }
        }
    }
    return rec.finish();
}

CheckReport check_quantifier_monotonicity(const CheckConfig& cfg) {
    Recorder rec("P9_quantifier_monotonicity", "P", cfg.tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltQMono);
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        // The tighter S-curve is dominated by the looser one pointwise.
        const SemiFuzzyQuantifier lo =
            make_binary_proportional("about_70pct_or_more", u, FuzzyNumber::smooth_step(0.5, 0.7), 1.0);
        const SemiFuzzyQuantifier hi =
            make_binary_proportional("about_50pct_or_more", u, FuzzyNumber::smooth_step(0.3, 0.5), 1.0);
        for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
            const FuzzySet x1 = random_fuzzy(rng, u);
            const FuzzySet x2 = random_fuzzy(rng, u);
            const double v_lo = eval_exact(lo, x1, x2);
            const double v_hi = eval_exact(hi, x1, x2);
            rec.observe(std::max(0.0, v_lo - v_hi), [&] {
                std::ostringstream os;
                os << "m=" << m << " X1=" << show(x1) << " X2=" << show(x2) << " F(Q)=" << v_lo
                   << " F(Q')=" << v_hi;
                return os.str();
            });
        }
    }
    return rec.finish();
}

CheckReport check_continuity_bounds(const CheckConfig& cfg) {
    Recorder rec("P11_P12_continuity", "P", cfg.tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltCont);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t bound = std::min<std::size_t>(cfg.max_m, 3);
    for (std::size_t m = 1; m <= bound; ++m) {
        const Universe u(m);
        // Arguments: |F(Xs) - F(Xs')| <= arity*m*delta (the multilinear form
        // has unit-bounded partial derivatives in every grade).
        for (const auto& q : binary_inventory(u)) {
            for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
                const double delta = 0.05 * (1 + static_cast<int>(unit(rng) * 4));
                std::vector<FuzzySet> xs;
                std::vector<FuzzySet> moved;
                for (std::size_t a = 0; a < q.arity(); ++a) {
                    xs.push_back(random_fuzzy(rng, u));
                    std::vector<double> g(xs.back().grades().begin(), xs.back().grades().end());
                    for (double& v : g) {
                        const double shift = (2.0 * unit(rng) - 1.0) * delta;
                        v = std::min(1.0, std::max(0.0, v + shift));
                    }
                    moved.emplace_back(u, std::move(g));
                }
                const double diff = std::abs(eval_exact(q, xs) - eval_exact(q, moved));
                const double lipschitz = static_cast<double>(q.arity() * m) * delta;
                rec.observe(std::max(0.0, diff - lipschitz), [&, &q = q] {
                    std::ostringstream os;
                    os << "args: Q=" << q.name() << " m=" << m << " delta=" << delta
                       << " diff=" << diff << " bound=" << lipschitz;
                    return os.str();
                });
            }
        }
        // Quantifiers: |F(Q) - F(Q')| <= d(Q, Q') (1-Lipschitz in the
        // sup-distance between kernels).
        for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
            const std::size_t entries = std::size_t{1} << (2 * m);
            std::vector<double> table(entries);
            std::vector<double> perturbed(entries);
            double d = 0.0;
            for (std::size_t i = 0; i < entries; ++i) {
                table[i] = unit(rng);
                const double shift = (2.0 * unit(rng) - 1.0) * 0.1;
                perturbed[i] = std::min(1.0, std::max(0.0, table[i] + shift));
                d = std::max(d, std::abs(perturbed[i] - table[i]));
            }
            const SemiFuzzyQuantifier q = make_table("probe", u, 2, std::move(table));
            const SemiFuzzyQuantifier qp = make_table("probe_moved", u, 2, std::move(perturbed));
            const FuzzySet x1 = random_fuzzy(rng, u);
            const FuzzySet x2 = random_fuzzy(rng, u);
            const double diff = std::abs(eval_exact(q, x1, x2) - eval_exact(qp, x1, x2));
            rec.observe(std::max(0.0, diff - d), [&] {
                std::ostringstream os;
                os << "quantifiers: m=" << m << " d(Q,Q')=" << d << " diff=" << diff;
                return os.str();
            });
        }
    }
    return rec.finish();
}

CheckReport check_fuzzy_arg_insertion(const CheckConfig& cfg) {
    Recorder rec("P13_fuzzy_arg_insertion", "P", cfg.tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltInsert);
    const std::size_t bound = std::min<std::size_t>(cfg.max_m, 3);
    for (std::size_t m = 1; m <= bound; ++m) {
        const Universe u(m);
        std::vector<SemiFuzzyQuantifier> qs;
        qs.push_back(make_some(u));
        qs.push_back(make_all(u));
        qs.push_back(make_nearly_all(u));
        for (const auto& q : qs) {
            for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
                const FuzzySet a = random_fuzzy(rng, u);
                const FuzzySet x1 = random_fuzzy(rng, u);
                const SemiFuzzyQuantifier inserted = fuzzy_arg_insertion(q, a);
                const double lhs = eval_exact(inserted, x1);
                const double rhs = eval_exact(q, x1, a);
                rec.observe(std::abs(lhs - rhs), [&, &q = q] {
                    std::ostringstream os;
                    os << "Q=" << q.name() << " m=" << m << " A=" << show(a) << " X1=" << show(x1)
                       << " lhs=" << lhs << " rhs=" << rhs;
                    return os.str();
                });
            }
        }
    }
    return rec.finish();
}

CheckReport check_identity_averaging(const CheckConfig& cfg) {
    Recorder rec("P14_identity_averaging", "P", 1e-12);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltIdentity);
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        const SemiFuzzyQuantifier id = make_identity(u);
        for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
            const FuzzySet x = random_fuzzy(rng, u);
            const double mean = x.grade_sum() / static_cast<double>(m);
            const double viol = std::max(std::abs(eval_exact(id, x) - mean),
                                         std::abs(eval_unary_dp(id, x) - mean));
            rec.observe(viol, [&] {
                std::ostringstream os;
                os << "m=" << m << " X=" << show(x) << " mean=" << mean;
                return os.str();
            });
        }
    }
    return rec.finish();
}

CheckReport check_ruspini_probabilistic(const CheckConfig& cfg) {
    Recorder rec("P15_ruspini_partition", "P", cfg.tolerance);
    if (cfg.max_m == 0) return rec.skip();
    std::mt19937_64 rng(cfg.seed ^ kSaltRuspini);
    for (std::size_t m = 1; m <= cfg.max_m; ++m) {
        const Universe u(m);
        const std::vector<SemiFuzzyQuantifier> triple = make_ruspini_partition(u);
        for (std::size_t probe = 0; probe < cfg.probes; ++probe) {
            const FuzzySet x1 = random_fuzzy(rng, u);
            const FuzzySet x2 = random_fuzzy(rng, u);
            double sum = 0.0;
            for (const auto& q : triple) sum += eval_exact(q, x1, x2);
            rec.observe(std::abs(sum - 1.0), [&] {
                std::ostringstream os;
                os << "m=" << m << " X1=" << show(x1) << " X2=" << show(x2) << " sum=" << sum;
                return os.str();
            });
        }
    }
    return rec.finish();
}

std::vector<CheckReport> run_checks(const CheckConfig& cfg, const std::string& suite) {
    std::vector<CheckReport> reports;
    const bool want_z = suite == "all" || suite == "Z";
    const bool want_p = suite == "all" || suite == "P";
    if (want_z) {
        reports.push_back(check_Z1_correct_generalization(cfg));
        reports.push_back(check_Z2_projection(cfg));
        reports.push_back(check_Z3_dualisation(cfg));
        reports.push_back(check_Z4_internal_joins(cfg));
        reports.push_back(check_Z4_discrimination_min_tnorm(cfg));
        reports.push_back(check_Z5_monotonicity(cfg));
        reports.push_back(check_Z6_functional_application(cfg));
    }
    if (want_p) {
        reports.push_back(check_external_internal_negation(cfg));
        reports.push_back(check_quantifier_monotonicity(cfg));
        reports.push_back(check_continuity_bounds(cfg));
        reports.push_back(check_fuzzy_arg_insertion(cfg));
        reports.push_back(check_identity_averaging(cfg));
        reports.push_back(check_ruspini_probabilistic(cfg));
    }
    return reports;
}

}  // namespace fquant

#include "pfshuffle/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "pfshuffle/errors.hpp"
#include "pfshuffle/oracle.hpp"
#include "pfshuffle/parallel.hpp"
#include "pfshuffle/pfaffian.hpp"
#include "pfshuffle/shuffle.hpp"
#include "pfshuffle/spinaction.hpp"
#include "pfshuffle/straighten.hpp"

namespace pfshuffle {

std::string library_version() { return PFSHUFFLE_VERSION; }

void to_json(nlohmann::json& j, const RunConfig& c) {
    j = nlohmann::json{{"n", c.n},
                       {"command", c.command},
                       {"output", c.json ? "json" : "text"},
                       {"threads", c.threads},
                       {"step_budget", c.step_budget},
                       {"allow_large", c.allow_large},
                       {"seed", c.seed}};
}

namespace {

struct Inputs {
    std::string row;
    std::string tableau;
    std::string rows;
    std::string op;
    std::string vector;
    bool pfaffian_check = false;
    bool check = false;
    bool random_order = false;
    bool span = false;
    bool basis = false;
    bool exhaustive = false;
};

void emit(std::ostream& out, const RunConfig& config, nlohmann::json result) {
    nlohmann::json report{{"version", library_version()}, {"config", config}, {"result", std::move(result)}};
    out << report.dump(2) << '\n';
}

int run_pfaffian(const RunConfig& config, const Inputs& in, std::ostream& out) {
    const Row row = parse_row(in.row, config.n);
    PfaffianContext ctx(config.n);
    const SparsePoly p = ctx.pf_row(row);
    if (config.json) {
        emit(out, config, {{"row", row}, {"pfaffian", poly_to_json(p)}, {"text", p.to_string()}});
    } else {
        out << p.to_string() << '\n';
    }
    return exit_ok;
}

int run_theta(const RunConfig& config, const Inputs& in, std::ostream& out, std::ostream& err) {
    const Tableau t = parse_tableau(in.tableau, config.n);
    const FormalQuadratic theta = shuffling_relation(t, config.n);
    bool vanishes = true;
    if (in.pfaffian_check) {
        PfaffianContext ctx(config.n);
        vanishes = pfaffian_substitute(theta, ctx).is_zero();
    }
    if (config.json) {
        nlohmann::json result{{"tableau", t}, {"theta", to_json_value(theta)}, {"text", theta.to_string(config.n)}};
        if (in.pfaffian_check) result["pfaffian_vanishes"] = vanishes;
        emit(out, config, std::move(result));
    } else {
        out << theta.to_string(config.n) << '\n';
        if (in.pfaffian_check) out << "pfaffian substitution: " << (vanishes ? "zero" : "NONZERO") << '\n';
    }
    if (!vanishes) {
        err << "check failed for tableau " << format_tableau(t, config.n) << '\n';
        return exit_check_failed;
    }
    return exit_ok;
}

int run_straighten(const RunConfig& config, const Inputs& in, std::ostream& out, std::ostream& err) {
    const std::vector<Row> rows = parse_row_list(in.rows, config.n);
    if (rows.empty()) throw InputError("--rows needs at least one row");
    StraighteningOptions options;
    options.step_budget = config.step_budget;
    options.seed = config.seed;
    options.order = in.random_order ? ReductionOrder::randomized : ReductionOrder::canonical;
    const Straightener s(config.n, options);
    const MonomialResult r = s.straighten_monomial(rows);

    bool ok = true;
    if (in.check) {
        PfaffianContext ctx(config.n);
        ok = std::all_of(r.expansion.begin(), r.expansion.end(),
                         [](const auto& t) { return is_standard_monomial(t.first); }) &&
             expansion_pf(r.expansion, ctx) == monomial_pf(rows, ctx);
    }
    if (config.json) {
        nlohmann::json result{{"rows", rows},
                              {"expansion", monomial_expansion_to_json(r.expansion)},
                              {"text", to_string(r.expansion, config.n)},
                              {"steps", r.steps}};
        if (in.check) result["check_ok"] = ok;
        emit(out, config, std::move(result));
    } else {
        out << to_string(r.expansion, config.n) << '\n';
        out << "steps: " << r.steps << '\n';
        if (in.check) out << "check: " << (ok ? "ok" : "FAILED") << '\n';
    }
    if (!ok) {
        err << "check failed for tableau " << in.rows << '\n';
        return exit_check_failed;
    }
    return exit_ok;
}

int run_verify(const RunConfig& config, Inputs in, std::ostream& out, std::ostream& err) {
    if (!in.span && !in.basis && !in.exhaustive) in.span = true;
    OracleConfig oc;
    oc.allow_large = config.allow_large;
    oc.threads = config.threads;
    PfaffianContext ctx(config.n);
    nlohmann::json result{{"n", config.n}, {"pairs", pair_count(config.n)}};
    bool ok = true;
    std::vector<std::string> failures;

    if (in.span) {
        const SpanReport r = span_equals_kernel(config.n, ctx, oc);
        result["kernel_dim"] = r.kernel_dim;
        result["theta_count"] = r.theta_count;
        result["theta_rank"] = r.theta_rank;
        result["span_ok"] = r.span_ok;
        result["all_theta_vanish"] = r.all_theta_vanish;
        ok = ok && r.span_ok;
    }
    if (in.exhaustive) {
        if (config.n > oc.bound && !oc.allow_large) {
            throw InputError("exhaustive check refuses n above " + std::to_string(oc.bound) + " without --allow-large");
        }
        const std::vector<Tableau> tableaux = nonstandard_tableaux(config.n, true);
        std::vector<char> vanish(tableaux.size(), 0);
        parallel_for(tableaux.size(), config.threads, [&](std::size_t i) {
            vanish[i] = shuffling_relation_pf(tableaux[i], ctx).is_zero() ? 1 : 0;
        });
        bool all = true;
        for (std::size_t i = 0; i < tableaux.size(); ++i) {
            if (!vanish[i]) {
                all = false;
                failures.push_back(format_tableau(tableaux[i], config.n));
            }
        }
        result["theta_count"] = tableaux.size();
        result["all_theta_vanish"] = all && result.value("all_theta_vanish", true);
        ok = ok && all;
    }
    if (in.basis) {
        const IndependenceReport d1 = standard_monomial_independence(config.n, 1, ctx, oc);
        const IndependenceReport d2 = standard_monomial_independence(config.n, 2, ctx, oc);
        result["basis"] = {{"degree1", d1}, {"degree2", d2}};
        result["kernel_dim"] = d2.kernel_dim;
        ok = ok && d1.independent && d1.count_ok && d2.independent && d2.count_ok;
    }
    if (config.json) {
        emit(out, config, result);
    } else {
        for (const auto& [key, value] : result.items()) out << key << ": " << value.dump() << '\n';
    }
    for (const std::string& f : failures) err << "check failed for tableau " << f << '\n';
    return ok ? exit_ok : exit_check_failed;
}

int run_spin(const RunConfig& config, const Inputs& in, std::ostream& out) {
    if (in.op.size() < 2 || (in.op[0] != 'e' && in.op[0] != 'f' && in.op[0] != 'h')) {
        throw InputError("--op must look like e1, f3 or h2");
    }
    int index = 0;
    try {
        std::size_t used = 0;
        index = std::stoi(in.op.substr(1), &used);
        if (used != in.op.size() - 1) throw InputError("bad generator index");
    } catch (const std::logic_error&) {
        throw InputError("bad generator index in --op " + in.op);
    }
    const LinCombRows v = parse_lincomb(in.vector, config.n);
    const LinCombRows image = in.op[0] == 'e'   ? apply_e(index, v, config.n)
                              : in.op[0] == 'f' ? apply_f(index, v, config.n)
                                                : apply_h(index, v, config.n);
    if (config.json) {
        emit(out, config,
             {{"op", in.op}, {"input", to_json_value(v)}, {"image", to_json_value(image)},
              {"text", image.to_string(config.n)}});
    } else {
        out << image.to_string(config.n) << '\n';
    }
    return exit_ok;
}

int run_counterexample(RunConfig config, std::ostream& out, std::ostream& err) {
    config.n = 4;
    const TruncationCounterexample c = truncated_relation_counterexample();
    const bool reproduced = c.residual_all_standard && !c.residual_in_kernel;
    if (config.json) {
        emit(out, config,
             {{"full", to_json_value(c.full)},
              {"truncated", to_json_value(c.truncated)},
              {"companion", to_json_value(c.companion)},
              {"residual", to_json_value(c.residual)},
              {"residual_text", c.residual.to_string(4)},
              {"residual_pf", poly_to_json(c.residual_pf)},
              {"residual_all_standard", c.residual_all_standard},
              {"residual_in_kernel", c.residual_in_kernel}});
    } else {
        out << "full:      " << c.full.to_string(4) << '\n';
        out << "truncated: " << c.truncated.to_string(4) << '\n';
        out << "companion: " << c.companion.to_string(4) << '\n';
        out << "residual:  " << c.residual.to_string(4) << '\n';
        out << "residual pfaffian: " << c.residual_pf.to_string() << '\n';
        out << "residual standard: " << (c.residual_all_standard ? "yes" : "no") << '\n';
    }
    if (!reproduced) {
        err << "check failed for tableau 23;14\n";
        return exit_check_failed;
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shuffling relations among pfaffians of antisymmetric matrices", "pfshuffle"};
    app.require_subcommand(1);
    app.set_version_flag("--version", library_version());

    RunConfig config;
    config.threads = default_parallelism();
    Inputs in;
    unsigned threads = config.threads;
    app.add_option("--threads", threads, "worker threads (default: PFSHUFFLE_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));

    auto add_n = [&](CLI::App* sub) { sub->add_option("--n", config.n, "rank n")->required()->check(CLI::Range(1, 30)); };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", config.json, "machine-readable report"); };

    CLI::App* pf = app.add_subcommand("pfaffian", "print pf_I as a polynomial in x_ij");
    add_n(pf);
    add_json(pf);
    pf->add_option("--row", in.row, "row, e.g. \"23\" or \"\"")->required();

    CLI::App* theta = app.add_subcommand("theta", "print the shuffling relation of a two-row tableau");
    add_n(theta);
    add_json(theta);
    theta->add_option("--tableau", in.tableau, "rows separated by ';', e.g. \"23;14\"")->required();
    theta->add_flag("--pfaffian-check", in.pfaffian_check, "verify the relation vanishes on pfaffians");

    CLI::App* st = app.add_subcommand("straighten", "expand a product of rows in standard monomials");
    add_n(st);
    add_json(st);
    st->add_option("--rows", in.rows, "rows separated by ';'")->required();
    st->add_flag("--check", in.check, "compare both sides under pfaffian substitution");
    st->add_option("--budget", config.step_budget, "step budget")->check(CLI::PositiveNumber);
    st->add_flag("--random-order", in.random_order, "randomized reduction order");
    st->add_option("--seed", config.seed, "seed for --random-order");

    CLI::App* verify = app.add_subcommand("verify", "exact kernel and basis checks");
    add_n(verify);
    add_json(verify);
    verify->add_flag("--span", in.span, "shuffling relations span the kernel");
    verify->add_flag("--basis", in.basis, "standard monomials are independent");
    verify->add_flag("--exhaustive-theta", in.exhaustive, "every relation vanishes on pfaffians");
    verify->add_flag("--allow-large", config.allow_large, "accept n above the oracle bound");

    CLI::App* spin = app.add_subcommand("spin", "apply a Chevalley generator to a vector of the spin module");
    add_n(spin);
    add_json(spin);
    spin->add_option("--op", in.op, "e<i>, f<i> or h<i> with 1 <= i <= n+1")->required();
    spin->add_option("--vector", in.vector, "a row or a combination \"x(23) - x(14)\"")->required();

    CLI::App* cex = app.add_subcommand("counterexample", "the truncated relation at n = 4");
    add_json(cex);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    config.threads = threads;

    try {
        CLI::App* chosen = app.get_subcommands().front();
        config.command = chosen->get_name();
        if (chosen == pf) return run_pfaffian(config, in, out);
        if (chosen == theta) return run_theta(config, in, out, err);
        if (chosen == st) return run_straighten(config, in, out, err);
        if (chosen == verify) return run_verify(config, in, out, err);
        if (chosen == spin) return run_spin(config, in, out);
        return run_counterexample(config, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const StraighteningError& e) {
        err << "straightening failed: " << e.what() << "\nstate: " << e.state() << '\n';
        return exit_check_failed;
    }
}

} // namespace pfshuffle

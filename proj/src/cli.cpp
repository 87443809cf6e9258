#include "flowlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flowlab/crossing.hpp"
#include "flowlab/generators.hpp"
#include "flowlab/instance_io.hpp"
#include "flowlab/maxflow.hpp"
#include "flowlab/metadata_io.hpp"
#include "flowlab/oracle.hpp"
#include "flowlab/routing_io.hpp"
#include "flowlab/solvers.hpp"

namespace flowlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

Rational parse_rat_flag(const std::string& text, const std::string& what) {
    auto r = Rational::parse(text);
    if (!r) throw CLI::ValidationError(what, "expected an integer or p/q rational");
    return *r;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file " + path);
    return parse_instance(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct GenOptions {
    std::string family;
    std::string out_prefix = "out";
    int n = 3;
    int ell = 4;
    int p = 2, q = 2;
    std::string delta = "1/100";
    std::string packets = "auto";
    std::string gadget = "yes";
    std::string flavor;
    std::string dir = "undirected";
};

FamilySpec spec_from(const GenOptions& o, Flavor default_flavor) {
    FamilySpec spec;
    spec.gadget = o.gadget == "no" ? GadgetKind::no : GadgetKind::yes;
    spec.orientation = o.dir == "directed" ? Orientation::directed : Orientation::undirected;
    std::string flavor = o.flavor.empty()
                             ? (default_flavor == Flavor::confluent     ? "confluent"
                                : default_flavor == Flavor::priority ? "priority"
                                                                        : "unsplittable")
                             : o.flavor;
    spec.flavor = flavor == "confluent"  ? Flavor::confluent
                  : flavor == "priority" ? Flavor::priority
                                         : Flavor::unsplittable;
    return spec;
}

GenResult generate(const GenOptions& o) {
    if (o.family == "half-grid")
        return gen_half_grid(o.n, parse_rat_flag(o.delta, "--delta"),
                             spec_from(o, Flavor::unsplittable));
    if (o.family == "nba") {
        long packets = o.packets == "auto" ? 0 : std::stol(o.packets);
        return gen_nba_half_grid(o.n, packets, spec_from(o, Flavor::confluent));
    }
    if (o.family == "azar-regev") return gen_azar_regev(o.ell, spec_from(o, Flavor::unsplittable));
    if (o.family == "grid-paths")
        return gen_grid_paths(o.p, o.q, spec_from(o, Flavor::unsplittable));
    if (o.family == "priority")
        return gen_priority_half_grid(o.n, spec_from(o, Flavor::priority));
    throw CLI::ValidationError("--family",
                               "one of half-grid|nba|azar-regev|grid-paths|priority");
}

int cmd_gen(const GenOptions& o) {
    GenResult gen = generate(o);
    std::vector<std::string> diags = validate(gen.instance);
    if (!diags.empty()) throw std::logic_error("generator invariant broken: " + diags.front());
    write_file(o.out_prefix + ".ssf", serialize_instance(gen.instance));
    write_file(o.out_prefix + ".meta", serialize_metadata(gen.meta));
    int files = 2;
    if (gen.meta.has_canonical) {
        write_file(o.out_prefix + ".routing",
                   gen.meta.canonical_is_confluent
                       ? serialize_routing(gen.meta.canonical_confluent)
                       : serialize_routing(gen.meta.canonical_paths));
        ++files;
    }
    DerivedStats st = derived_stats(gen.instance);
    std::cout << "GEN family=" << gen.meta.family << " n=" << st.n << " m=" << st.m
              << " k=" << st.k << " spread=" << st.spread << " files=" << files << '\n';
    return kExitOk;
}

struct SolveOptions {
    std::string alg;
    std::string instance_path;
    std::string out_path;
};

int cmd_solve(const SolveOptions& o) {
    Instance inst = load_instance(o.instance_path);
    SolveResult res;
    if (o.alg == "greedy-card") {
        res = greedy_cardinality(inst);
    } else if (o.alg == "greedy-tput") {
        res = greedy_throughput(inst, {Objective::throughput, Rational(2)});
    } else if (o.alg == "greedy-priority") {
        res = greedy_priority(inst);
    } else if (o.alg == "priority-class") {
        res = priority_by_class(inst);
    } else if (o.alg == "maxflow-exact") {
        if (inst.has_priorities)
            for (int c : inst.edge_class)
                if (c != 1)
                    throw std::invalid_argument(
                        "maxflow-exact ignores priority classes; only single-class instances");
        Routing r = solve_unit_uniform(inst);
        res.routing = std::move(r);
        res.value = Rational(static_cast<long>(res.routing.paths.size()));
    } else {
        throw CLI::ValidationError(
            "--alg", "one of greedy-card|greedy-tput|greedy-priority|priority-class|maxflow-exact");
    }
    if (!o.out_path.empty()) write_file(o.out_path, serialize_routing(res.routing));
    std::cout << "RESULT alg=" << o.alg << " value=" << res.value
              << " routed=" << res.routing.paths.size() << " m=" << inst.graph.edge_count()
              << '\n';
    return kExitOk;
}

struct VerifyOptions {
    std::string instance_path;
    std::string routing_path;
};

int cmd_verify(const VerifyOptions& o) {
    Instance inst = load_instance(o.instance_path);
    std::ifstream rin(o.routing_path);
    if (!rin) throw std::runtime_error("cannot open routing file " + o.routing_path);
    RoutingFile rf = read_routing(rin);

    FeasibilityReport rep;
    ObjectiveValues ov;
    if (rf.confluent) {
        rep = check_confluent(inst, *rf.confluent);
        if (rep.feasible()) ov = objectives(inst, *rf.confluent);
    } else {
        rep = check_routing(inst, *rf.paths);
        if (rep.feasible()) ov = objectives(inst, *rf.paths);
    }
    if (!rep.feasible()) {
        std::cout << format_report(rep);
        return kExitInfeasible;
    }
    std::cout << "VERIFY feasible=1 cardinality=" << ov.cardinality
              << " throughput=" << ov.throughput << " profit=" << ov.profit << '\n';
    return kExitOk;
}

struct OracleOptions {
    std::string instance_path;
    std::string objective = "card";
};

int cmd_oracle(const OracleOptions& o) {
    Instance inst = load_instance(o.instance_path);
    OracleBudget budget = OracleBudget::from_env();
    OracleStatus status;
    std::ostringstream line;
    if (o.objective == "strong-congestion") {
        StrongCongestionResult res = exact_strong_congestion(inst, budget);
        status = res.status;
        line << "ORACLE value=" << (res.strong ? res.strong->str() : std::string("none"))
             << " status=" << (status == OracleStatus::exact ? "exact" : "exhausted") << '\n';
        line << "ORACLE-WEAK value=" << (res.weak_feasible ? res.weak.str() : std::string("none"))
             << '\n';
    } else {
        Objective obj = o.objective == "tput" ? Objective::throughput : Objective::cardinality;
        Rational value;
        if (inst.model == CapacityModel::node) {
            ConfluentOracleResult res = exact_confluent(inst, obj, budget);
            status = res.status;
            value = res.optimum;
        } else if (inst.has_priorities) {
            OracleResult res = exact_priority(inst, budget);
            status = res.status;
            value = res.optimum;
        } else {
            OracleResult res = exact_unsplittable(inst, obj, budget);
            status = res.status;
            value = res.optimum;
        }
        line << "ORACLE value=" << value
             << " status=" << (status == OracleStatus::exact ? "exact" : "exhausted") << '\n';
    }
    std::cout << line.str();
    return status == OracleStatus::exact ? kExitOk : kExitExhausted;
}

struct GapOptions {
    std::string family;
    std::vector<int> points;
    std::string delta;  // empty: 1/(100N)
    std::string dir = "undirected";
    std::string flavor;
    int q = 2;
    std::string out_path;
};

int cmd_gap(const GapOptions& o) {
    std::ostringstream table;
    table << "family\tpoint\tn\tm\tspread\tbottleneck\tyes_bound\tno_bound\tcanonical\t"
             "greedy_card\tgreedy_tput\tgreedy_priority\tpriority_class\tmaxflow_exact\t"
             "oracle_no\toracle_status\tgap\n";
    bool bound_violated = false, any_exhausted = false;
    OracleBudget budget = OracleBudget::from_env();

    for (int point : o.points) {
        GenOptions go;
        go.family = o.family;
        go.n = point;
        go.ell = point;
        go.p = point;
        go.q = o.q;
        go.dir = o.dir;
        if (!o.flavor.empty()) go.flavor = o.flavor;
        go.delta = o.delta.empty() ? "1/" + std::to_string(100L * point) : o.delta;

        go.gadget = "yes";
        GenResult yes = generate(go);
        go.gadget = "no";
        GenResult no = generate(go);

        // canonical value on the YES side, checked feasible
        ObjectiveValues yv;
        if (yes.meta.canonical_is_confluent)
            yv = objectives(yes.instance, yes.meta.canonical_confluent);
        else
            yv = objectives(yes.instance, yes.meta.canonical_paths);
        bool tput_headline = yes.meta.family == "nba-half-grid";
        Rational canonical = tput_headline ? yv.throughput : Rational(yv.cardinality);
        if (canonical < yes.meta.yes_value) bound_violated = true;

        std::string gc = "-", gt = "-", gp = "-", pc = "-", mf = "-";
        if (yes.instance.model == CapacityModel::edge && !yes.instance.has_priorities) {
            gc = greedy_cardinality(yes.instance).value.str();
            gt = greedy_throughput(yes.instance, {Objective::throughput, Rational(2)}).value.str();
        }
        if (yes.instance.has_priorities) {
            gp = greedy_priority(yes.instance).value.str();
            pc = priority_by_class(yes.instance).value.str();
        }
        DerivedStats st = derived_stats(yes.instance);
        if (st.spread == Rational(1) && yes.instance.model == CapacityModel::edge &&
            !yes.instance.has_priorities)
            mf = Rational(static_cast<long>(solve_unit_uniform(yes.instance).paths.size())).str();

        // oracle on the NO side at the family's headline objective
        Rational no_value;
        OracleStatus status;
        if (no.instance.model == CapacityModel::node) {
            ConfluentOracleResult res = exact_confluent(
                no.instance, tput_headline ? Objective::throughput : Objective::cardinality,
                budget);
            no_value = res.optimum;
            status = res.status;
        } else if (no.instance.has_priorities) {
            OracleResult res = exact_priority(no.instance, budget);
            no_value = res.optimum;
            status = res.status;
        } else {
            OracleResult res = exact_unsplittable(no.instance, Objective::cardinality, budget);
            no_value = res.optimum;
            status = res.status;
        }
        bool exhausted = status == OracleStatus::exhausted;
        any_exhausted |= exhausted;
        if (!exhausted && no_value > no.meta.no_value) bound_violated = true;

        table << yes.meta.family << '\t' << point << '\t' << st.n << '\t' << st.m << '\t'
              << st.spread << '\t' << st.bottleneck << '\t' << yes.meta.yes_value << '\t'
              << no.meta.no_value << '\t' << canonical << '\t' << gc << '\t'
              << gt << '\t' << gp << '\t' << pc << '\t' << mf << '\t'
              << (exhausted ? "-" : no_value.str()) << '\t'
              << (exhausted ? "exhausted" : "exact") << '\t'
              << (exhausted || no_value.is_zero() ? std::string("-")
                                                  : (canonical / no_value).str())
              << '\n';
    }
    if (o.out_path.empty())
        std::cout << table.str();
    else
        write_file(o.out_path, table.str());
    if (bound_violated) return kExitInfeasible;
    if (any_exhausted) return kExitExhausted;
    return kExitOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"single-sink flow toolkit: generators, solvers, verifier, exact oracle"};
    app.require_subcommand(1);

    GenOptions gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance family point");
    gen->add_option("family", gen_opts.family, "half-grid|nba|azar-regev|grid-paths|priority")
        ->required();
    gen->add_option("--n", gen_opts.n, "grid size N");
    gen->add_option("--l", gen_opts.ell, "azar-regev length");
    gen->add_option("--p", gen_opts.p, "grid-paths p");
    gen->add_option("--q", gen_opts.q, "grid-paths q");
    gen->add_option("--delta", gen_opts.delta, "half-grid demand increment (rational)");
    gen->add_option("--packets", gen_opts.packets, "nba packets per source, or 'auto'");
    gen->add_option("--gadget", gen_opts.gadget, "yes|no")
        ->check(CLI::IsMember({"yes", "no"}));
    gen->add_option("--flavor", gen_opts.flavor, "unsplittable|confluent|priority");
    gen->add_option("--dir", gen_opts.dir, "directed|undirected")
        ->check(CLI::IsMember({"directed", "undirected"}));
    gen->add_option("--out", gen_opts.out_prefix, "output file prefix");

    SolveOptions solve_opts;
    CLI::App* solve = app.add_subcommand("solve", "run an approximation algorithm");
    solve->add_option("--alg", solve_opts.alg, "algorithm")
        ->required()
        ->check(CLI::IsMember(
            {"greedy-card", "greedy-tput", "greedy-priority", "priority-class", "maxflow-exact"}));
    solve->add_option("--instance", solve_opts.instance_path, "instance file")->required();
    solve->add_option("--out", solve_opts.out_path, "routing output file");

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "check a routing file");
    verify->add_option("--instance", verify_opts.instance_path, "instance file")->required();
    verify->add_option("--routing", verify_opts.routing_path, "routing file")->required();

    OracleOptions oracle_opts;
    CLI::App* oracle = app.add_subcommand("oracle", "exact optimum on a small instance");
    oracle->add_option("--instance", oracle_opts.instance_path, "instance file")->required();
    oracle->add_option("--objective", oracle_opts.objective, "card|tput|strong-congestion")
        ->check(CLI::IsMember({"card", "tput", "strong-congestion"}));

    GapOptions gap_opts;
    CLI::App* gap = app.add_subcommand("gap", "YES/NO gap sweep over a family");
    gap->add_option("--family", gap_opts.family, "family")->required();
    gap->add_option("--points", gap_opts.points, "parameter points (N, or ell, or p)")
        ->required();
    gap->add_option("--delta", gap_opts.delta, "half-grid delta override");
    gap->add_option("--q", gap_opts.q, "grid-paths q");
    gap->add_option("--dir", gap_opts.dir, "directed|undirected");
    gap->add_option("--flavor", gap_opts.flavor, "flavor override");
    gap->add_option("--out", gap_opts.out_path, "write the TSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_opts);
        if (solve->parsed()) return cmd_solve(solve_opts);
        if (verify->parsed()) return cmd_verify(verify_opts);
        if (oracle->parsed()) return cmd_oracle(oracle_opts);
        if (gap->parsed()) return cmd_gap(gap_opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    }
    return kExitUsage;
}

}  // namespace flowlab

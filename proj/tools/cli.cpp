#include "cli.hpp"

#include "blindtm/builders.hpp"
#include "blindtm/campaign.hpp"
#include "blindtm/circuit.hpp"
#include "blindtm/errors.hpp"
#include "blindtm/oracles.hpp"
#include "blindtm/reductions.hpp"
#include "blindtm/text.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace blindtm::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UnsupportedError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << content))
        throw UnsupportedError("cannot write " + path);
}

// Everything that names a problem instance.
struct ProblemArgs {
    std::string problem;
    std::string graph;
    std::string matrix;
    std::string sigma = "all";
    std::string rho = "all";
    std::string card = "at-most";
    std::string mode = "min-distance";
    std::string property = "always-true";
    bool dual = false;
    int k = -1;
    int r = 0;
};

void add_problem_options(CLI::App* app, ProblemArgs& a)
{
    app->add_option("--problem", a.problem, "sigma-rho | p-rho | kernel | r-regular | code")
        ->required()
        ->check(CLI::IsMember({"sigma-rho", "p-rho", "kernel", "r-regular", "code"}));
    app->add_option("--graph", a.graph, "graph file (digraph file for kernel)");
    app->add_option("--matrix", a.matrix, "matrix file (code)");
    app->add_option("--sigma", a.sigma, "set spec for members of D");
    app->add_option("--rho", a.rho, "set spec for vertices outside D");
    app->add_option("--card", a.card, "at-most | at-least-n-minus | exactly | exactly-n-minus");
    app->add_option("--mode", a.mode, "min-distance | weight-distribution (code)");
    app->add_option("--property", a.property, "graph property (p-rho)");
    app->add_flag("--dual", a.dual, "parameterize by the excluded columns (code)");
    app->add_option("--k", a.k, "parameter")->required()->check(CLI::NonNegativeNumber);
    app->add_option("--r", a.r, "regularity (r-regular)")->check(CLI::NonNegativeNumber);
}

// A parsed instance: exactly one of the instance fields is used per problem.
struct Problem {
    ProblemArgs args;
    Graph graph;
    Digraph digraph;
    FqMatrix matrix;
    IntSetSpec sigma = IntSetSpec::all(0);
    IntSetSpec rho = IntSetSpec::all(0);
    CardinalityMode card;
    CodeMode code_mode = CodeMode::MinDistance;
    std::optional<GraphProperty> property;
};

Problem load(const ProblemArgs& a)
{
    Problem p;
    p.args = a;
    auto need = [&](const std::string& value, const char* flag) {
        if (value.empty())
            throw UnsupportedError(std::string("--problem ") + a.problem + " needs " + flag);
    };
    if (a.problem == "code") {
        need(a.matrix, "--matrix");
        p.matrix = parse_matrix(read_file(a.matrix));
        p.code_mode = parse_code_mode(a.mode);
        return p;
    }
    need(a.graph, "--graph");
    if (a.problem == "kernel") {
        p.digraph = parse_digraph(read_file(a.graph));
        return p;
    }
    p.graph = parse_graph(read_file(a.graph));
    const int bound = std::max(a.k, p.graph.order());
    p.sigma = parse_int_set(a.sigma, bound);
    p.rho = parse_int_set(a.rho, bound);
    p.card = {parse_cardinality(a.card), a.k};
    if (a.problem == "p-rho")
        p.property = parse_property(a.property);
    return p;
}

BuiltInstance build(const Problem& p)
{
    const auto& a = p.args;
    if (a.problem == "sigma-rho")
        return build_sigma_rho(p.graph, p.sigma, p.rho, p.card);
    if (a.problem == "p-rho")
        return build_sigma_rho(p.graph, IntSetSpec::all(std::max(a.k, p.rho.bound())), p.rho, CardinalityMode::at_most(a.k));
    if (a.problem == "kernel")
        return build_digraph_kernel(p.digraph, a.k);
    if (a.problem == "r-regular")
        return build_induced_r_regular(p.graph, a.r, a.k);
    return build_code_machine(p.matrix, a.k, p.code_mode, a.dual);
}

struct Decision {
    bool yes = false;
    VertexSet witness;
    std::vector<std::string> trace;
};

std::vector<std::string> trace_of(const BlindMachine& m, const std::vector<std::size_t>& witness)
{
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < witness.size(); ++i)
        lines.push_back(std::to_string(i + 1) + ": [" + std::to_string(witness[i] + 1) + "] " +
                        format_transition(m, m.transitions[witness[i]]));
    return lines;
}

Decision solve_oracle(const Problem& p)
{
    const auto& a = p.args;
    OracleVerdict v;
    if (a.problem == "sigma-rho")
        v = oracle_sigma_rho(p.graph, p.sigma, p.rho, p.card, 1);
    else if (a.problem == "p-rho")
        v = oracle_p_rho(p.graph, *p.property, p.rho, a.k, 1);
    else if (a.problem == "kernel")
        v = oracle_kernel(p.digraph, a.k, 1);
    else if (a.problem == "r-regular")
        v = oracle_r_regular(p.graph, a.r, a.k, 1);
    else
        v = oracle_code_sum(p.matrix, a.k, p.code_mode, a.dual, 1);
    Decision d;
    d.yes = v.decision;
    if (d.yes)
        d.witness = v.witnesses.front();
    return d;
}

Decision solve_tm(const Problem& p)
{
    Decision d;
    if (p.args.problem == "p-rho") {
        auto r = decide_p_rho(p.graph, *p.property, p.rho, p.args.k);
        d.yes = r.yes;
        d.witness = r.witness;
        return d;
    }
    auto b = build(p);
    auto run = search_accepting(b.machine, {}, b.step_bound);
    d.yes = run.accepted;
    if (d.yes) {
        d.witness = solution_set(b, run);
        d.trace = trace_of(b.machine, run.witness);
    }
    return d;
}

Decision solve_circuit(const Problem& p, const std::string& sat)
{
    if (p.args.problem == "p-rho")
        throw UnsupportedError("the circuit engine does not decide p-rho (the property check runs outside the machine)");
    auto b = build(p);
    auto normalized = normalize_for_exact(b.machine);
    auto c = compile_circuit(normalized, {}, b.step_bound + 2);
    auto a = sat == "brute" ? weighted_sat_brute(c, c.steps()) : weighted_sat_blocks(c);
    Decision d;
    d.yes = a.has_value();
    if (d.yes) {
        auto witness = witness_from_assignment(c, *a);
        if (!witness)
            throw std::logic_error("satisfying assignment is not one transition per step");
        RunResult run;
        run.accepted = true;
        run.steps = static_cast<int>(witness->size());
        run.witness = *witness;
        run.final = replay(normalized, {}, *witness);
        d.witness = solution_set(b, run);
        d.trace = trace_of(normalized, *witness);
    }
    return d;
}

std::vector<SymbolId> parse_word(const BlindMachine& m, const std::string& word)
{
    std::vector<SymbolId> out;
    if (word.empty())
        return out;
    for (const auto& name : text::split(word, ',')) {
        auto it = std::find(m.alphabet.begin(), m.alphabet.end(), name);
        if (it == m.alphabet.end())
            throw UnsupportedError("word symbol '" + name + "' is not in the alphabet");
        out.push_back(static_cast<SymbolId>(it - m.alphabet.begin()));
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Blind multi-tape Turing machines, their circuits and brute-force oracles", "blindtm"};
    app.require_subcommand(1);

    ProblemArgs solve_args;
    std::string engine = "tm", sat = "blocks";
    bool show_witness = false, show_trace = false;
    auto* solve = app.add_subcommand("solve", "decide an instance and print YES or NO");
    add_problem_options(solve, solve_args);
    solve->add_option("--engine", engine, "tm | circuit | oracle")->check(CLI::IsMember({"tm", "circuit", "oracle"}));
    solve->add_option("--sat", sat, "circuit search: blocks | brute")->check(CLI::IsMember({"blocks", "brute"}));
    solve->add_flag("--witness", show_witness, "print the solution set");
    solve->add_flag("--trace", show_trace, "print the accepting transition sequence");

    ProblemArgs build_args;
    std::string machine_out;
    bool normalize = false;
    auto* build_machine = app.add_subcommand("build-machine", "write the machine for an instance");
    add_problem_options(build_machine, build_args);
    build_machine->add_option("--out", machine_out, "output file (default: standard output)");
    build_machine->add_flag("--normalize", normalize, "merge accepting states for exact-length acceptance");

    std::string machine_file, word, circuit_out;
    int steps = 0;
    bool compile_normalize = false, check = false;
    auto* compile = app.add_subcommand("compile-circuit", "compile a machine into a weft-2 circuit");
    compile->add_option("--machine", machine_file, "machine file")->required();
    compile->add_option("--word", word, "comma-separated input symbols (default: empty)");
    compile->add_option("--k", steps, "number of steps")->required()->check(CLI::NonNegativeNumber);
    compile->add_option("--out", circuit_out, "circuit file (default: none)");
    compile->add_flag("--normalize", compile_normalize, "normalize first and compile k + 2 steps");
    compile->add_flag("--check", check, "also search for a satisfying assignment");

    CampaignOptions campaign;
    auto* verify = app.add_subcommand("verify", "compare engines with the oracles on seeded instances");
    verify->add_option("--problem", campaign.problem, "sigma-rho | p-rho | kernel | r-regular | code | reduction | all")
        ->required()
        ->check(CLI::IsMember({"sigma-rho", "p-rho", "kernel", "r-regular", "code", "reduction", "all"}));
    verify->add_option("--max-n", campaign.max_n, "largest instance")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-k", campaign.max_k, "largest parameter")->check(CLI::NonNegativeNumber);
    verify->add_option("--trials", campaign.trials, "instances per problem")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", campaign.seed, "generator seed");
    verify->add_flag("--circuit", campaign.circuit, "also decide through the compiled circuit");

    std::string reduction, reduce_graph, reduce_out;
    auto* reduce = app.add_subcommand("reduce", "transform an instance");
    reduce->add_option("reduction", reduction, "is-to-sss")->required()->check(CLI::IsMember({"is-to-sss"}));
    reduce->add_option("--graph", reduce_graph, "graph file")->required();
    reduce->add_option("--out", reduce_out, "output file (default: standard output)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            auto p = load(solve_args);
            Decision d = engine == "oracle" ? solve_oracle(p) : engine == "circuit" ? solve_circuit(p, sat) : solve_tm(p);
            out << (d.yes ? "YES" : "NO") << '\n';
            if (show_witness && d.yes)
                out << format_set(d.witness) << '\n';
            if (show_trace)
                for (const auto& line : d.trace)
                    out << line << '\n';
            return kExitOk;
        }
        if (*build_machine) {
            auto b = build(load(build_args));
            if (normalize) {
                b.machine = normalize_for_exact(b.machine);
                b.step_bound += 2;
            }
            write_output(machine_out, serialize_built_instance(b), out);
            return kExitOk;
        }
        if (*compile) {
            auto m = parse_machine(read_file(machine_file));
            if (compile_normalize) {
                m = normalize_for_exact(m);
                steps += 2;
            }
            auto c = compile_circuit(m, parse_word(m, word), steps);
            if (!circuit_out.empty())
                write_output(circuit_out, serialize_circuit(c), out);
            auto stats = analyze(c);
            out << "weft=" << stats.weft << " depth=" << stats.depth << " gates=" << stats.gate_count << '\n';
            if (check)
                out << "satisfiable=" << (weighted_sat_blocks(c).has_value() ? "YES" : "NO") << '\n';
            return kExitOk;
        }
        if (*verify) {
            std::vector<std::string> problems{campaign.problem};
            if (campaign.problem == "all")
                problems = {"sigma-rho", "p-rho", "kernel", "r-regular", "code", "reduction"};
            bool all_agree = true;
            for (const auto& name : problems) {
                auto options = campaign;
                options.problem = name;
                auto report = run_campaign(options);
                out << format_report(report);
                all_agree = all_agree && report.agree == report.total;
            }
            return all_agree ? kExitOk : kExitDisagreement;
        }
        if (*reduce) {
            auto g = parse_graph(read_file(reduce_graph));
            write_output(reduce_out, serialize_reduced(reduce_is_to_sss(g)), out);
            return kExitOk;
        }
    } catch (const GuardError& e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace blindtm::cli

#include "blindtm/campaign.hpp"

#include "blindtm/builders.hpp"
#include "blindtm/circuit.hpp"
#include "blindtm/instances.hpp"
#include "blindtm/oracles.hpp"
#include "blindtm/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blindtm {

namespace {

const char* yes_no(bool b)
{
    return b ? "YES" : "NO";
}

std::string edges_of(const Graph& g)
{
    std::ostringstream out;
    for (auto [u, v] : g.edges())
        out << ' ' << u << '-' << v;
    return out.str();
}

std::string arcs_of(const Digraph& d)
{
    std::ostringstream out;
    for (auto [u, v] : d.arcs())
        out << ' ' << u << '>' << v;
    return out.str();
}

// Verdict of the machine, and of its compiled circuit when asked for.
struct EngineResult {
    bool tm = false;
    bool circuit = false;
    bool witness_ok = true;
};

template <typename Check>
EngineResult run_engines(const BuiltInstance& b, bool with_circuit, Check check_witness)
{
    EngineResult r;
    auto run = search_accepting(b.machine, {}, b.step_bound);
    r.tm = run.accepted;
    if (run.accepted)
        r.witness_ok = check_witness(solution_set(b, run));
    r.circuit = r.tm;
    if (with_circuit) {
        auto normalized = normalize_for_exact(b.machine);
        auto c = compile_circuit(normalized, {}, b.step_bound + 2);
        r.circuit = weighted_sat_blocks(c).has_value();
    }
    return r;
}

} // namespace

CampaignReport run_campaign(const CampaignOptions& o)
{
    if (o.max_n < 0 || o.max_k < 0 || o.trials < 0)
        throw std::invalid_argument("campaign sizes must be nonnegative");
    CampaignReport report;
    report.problem = o.problem;
    InstanceRng rng(o.seed);

    for (int trial = 1; trial <= o.trials; ++trial) {
        std::ostringstream what;
        bool agree = true;
        what << "trial " << trial << ": ";
        if (o.problem == "sigma-rho") {
            const int n = rng.below(o.max_n + 1);
            auto g = random_graph(rng, n);
            const int k = rng.below(o.max_k + 1);
            auto sets = standard_sets(std::max(n, k));
            const auto& sigma = sets[static_cast<std::size_t>(rng.below(8))];
            const auto& rho = sets[static_cast<std::size_t>(rng.below(8))];
            CardinalityMode mode{static_cast<CardinalityMode::Kind>(rng.below(4)), k};
            auto b = build_sigma_rho(g, sigma.spec, rho.spec, mode);
            auto r = run_engines(b, o.circuit, [&](const VertexSet& d) {
                return is_sigma_rho_set(g, sigma.spec, rho.spec, d) && mode.admits(static_cast<int>(d.size()), n);
            });
            const bool oracle = oracle_sigma_rho(g, sigma.spec, rho.spec, mode, 1).decision;
            agree = r.tm == oracle && r.circuit == oracle && r.witness_ok;
            what << "n=" << n << " edges:" << edges_of(g) << " sigma=" << sigma.name << " rho=" << rho.name
                 << " mode=" << to_string(mode.kind) << " k=" << k << " tm=" << yes_no(r.tm)
                 << " circuit=" << yes_no(r.circuit) << " oracle=" << yes_no(oracle);
        } else if (o.problem == "p-rho") {
            const int n = rng.below(o.max_n + 1);
            auto g = random_graph(rng, n);
            const int k = rng.below(o.max_k + 1);
            auto props = standard_properties();
            const auto& p = props[static_cast<std::size_t>(rng.below(static_cast<int>(props.size())))];
            auto sets = standard_sets(std::max(n, k));
            const auto& rho = sets[static_cast<std::size_t>(rng.below(8))];
            auto tm = decide_p_rho(g, p, rho.spec, k);
            const bool oracle = oracle_p_rho(g, p, rho.spec, k, 1).decision;
            const bool witness_ok = !tm.yes || (static_cast<int>(tm.witness.size()) <= k && p(g.induced(tm.witness)) &&
                                                is_sigma_rho_set(g, IntSetSpec::all(std::max(n, k)), rho.spec, tm.witness));
            agree = tm.yes == oracle && witness_ok;
            what << "n=" << n << " edges:" << edges_of(g) << " property=" << p.name() << " rho=" << rho.name
                 << " k=" << k << " tm=" << yes_no(tm.yes) << " oracle=" << yes_no(oracle);
        } else if (o.problem == "kernel") {
            const int n = rng.below(o.max_n + 1);
            auto d = random_digraph(rng, n);
            const int k = rng.below(o.max_k + 1);
            auto b = build_digraph_kernel(d, k);
            auto r = run_engines(b, o.circuit, [&](const VertexSet& s) { return is_kernel(d, s) && static_cast<int>(s.size()) <= k; });
            const bool oracle = oracle_kernel(d, k, 1).decision;
            agree = r.tm == oracle && r.circuit == oracle && r.witness_ok;
            what << "n=" << n << " arcs:" << arcs_of(d) << " k=" << k << " tm=" << yes_no(r.tm)
                 << " circuit=" << yes_no(r.circuit) << " oracle=" << yes_no(oracle);
        } else if (o.problem == "r-regular") {
            const int n = rng.below(o.max_n + 1);
            auto g = random_graph(rng, n);
            const int k = rng.below(o.max_k + 1);
            const int r_value = rng.below(k + 1);
            auto b = build_induced_r_regular(g, r_value, k);
            auto r = run_engines(b, o.circuit, [&](const VertexSet& d) {
                return !d.empty() && static_cast<int>(d.size()) <= k && is_r_regular_set(g, r_value, d);
            });
            const bool oracle = oracle_r_regular(g, r_value, k, 1).decision;
            agree = r.tm == oracle && r.circuit == oracle && r.witness_ok;
            what << "n=" << n << " edges:" << edges_of(g) << " r=" << r_value << " k=" << k << " tm=" << yes_no(r.tm)
                 << " circuit=" << yes_no(r.circuit) << " oracle=" << yes_no(oracle);
        } else if (o.problem == "code") {
            static constexpr int fields[] = {2, 3, 5};
            const int q = fields[rng.below(3)];
            const int rows = rng.below(4);
            const int cols = rng.below(std::min(o.max_n, 5) + 1);
            auto h = random_matrix(rng, q, rows, cols);
            const int k = rng.below(o.max_k + 1);
            const auto mode = rng.coin(2) ? CodeMode::MinDistance : CodeMode::WeightDistribution;
            const bool dual = rng.coin(2);
            auto b = build_code_machine(h, k, mode, dual);
            auto r = run_engines(b, o.circuit, [&](const VertexSet& c) { return sums_to_zero(h, c); });
            const bool oracle = oracle_code_sum(h, k, mode, dual, 1).decision;
            agree = r.tm == oracle && r.circuit == oracle && r.witness_ok;
            what << "q=" << q << " matrix " << rows << "x" << cols << " mode=" << to_string(mode) << " dual=" << dual
                 << " k=" << k << " tm=" << yes_no(r.tm) << " circuit=" << yes_no(r.circuit) << " oracle=" << yes_no(oracle);
        } else if (o.problem == "reduction") {
            const int n = rng.below(o.max_n + 1);
            auto g = random_graph(rng, n);
            const int k = rng.below(n + 1);
            agree = verify_reduction(g, k);
            what << "n=" << n << " edges:" << edges_of(g) << " k=" << k;
        } else {
            throw std::invalid_argument("unknown problem '" + o.problem + "'");
        }
        ++report.total;
        if (agree)
            ++report.agree;
        else
            report.disagreements.push_back(what.str());
    }
    return report;
}

std::string format_report(const CampaignReport& report)
{
    std::ostringstream out;
    out << report.problem << ": " << report.agree << '/' << report.total << " agree\n";
    for (const auto& line : report.disagreements)
        out << "disagree " << line << '\n';
    return out.str();
}

} // namespace blindtm

#include "swchain/chain.hpp"
#include "swchain/degseq.hpp"
#include "swchain/mixflow.hpp"
#include "swchain/redblue.hpp"
#include "swchain/stability.hpp"
#include "swchain/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace swchain;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string subcommand;
    std::string seq, x_file, y_file, matching = "auto", out, report, region = "all", er, format = "edges", eps = "0.1,0.01";
    std::uint64_t steps = 0, seed = 0, samples = 1;
    std::size_t cap = 100000;
    unsigned threads = 1;
    double gamma = 3.0, kconst = 1.0;
    bool gamma_set = false;
    int verbosity = 0;

    json to_json() const
    {
        json j;
        j["subcommand"] = subcommand;
        if (!seq.empty()) j["seq"] = seq;
        if (subcommand == "sample") {
            j["steps"] = steps;
            j["seed"] = seed;
            j["samples"] = samples;
        }
        if (subcommand == "decompose") {
            j["x"] = x_file;
            j["y"] = y_file;
            j["matching"] = matching;
        }
        if (subcommand == "stability-check") {
            j["region"] = region;
            if (gamma_set) {
                j["gamma"] = gamma;
                j["kconst"] = kconst;
            }
            if (!er.empty()) j["er"] = er;
            j["seed"] = seed;
        }
        if (subcommand == "mix-analyze") j["eps"] = eps;
        j["cap"] = cap;
        j["threads"] = threads;
        return j;
    }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw PreconditionViolation("cannot write " + cfg.out);
    f << text;
}

json report_head(const RunConfig& cfg, const std::string& check)
{
    json j;
    j["schema"] = 1;
    j["check"] = check;
    j["config"] = cfg.to_json();
    return j;
}

json edges_json(const std::vector<Edge>& es)
{
    auto a = json::array();
    for (auto& e : es) a.push_back({e.first, e.second});
    return a;
}

std::vector<double> parse_doubles(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ParseError("expected a number, got '" + item + "'");
        }
        if (used != item.size()) throw ParseError("trailing characters in '" + item + "'");
        out.push_back(v);
    }
    return out;
}

int cmd_sample(const RunConfig& cfg)
{
    DegreeSequence d = read_degree_sequence_file(cfg.seq);
    if (cfg.samples <= 1) {
        Realization g = run_walk(d, cfg.steps, cfg.seed);
        if (cfg.format == "json") {
            json j = report_head(cfg, "sample");
            j["realization"] = g.to_json();
            emit(cfg, j.dump(2) + "\n");
        } else {
            emit(cfg, g.to_edge_list());
        }
        return 0;
    }
    std::vector<Realization> exact;
    bool have_exact = true;
    try {
        exact = enumerate_realizations(d, cfg.cap);
    } catch (const CapExceeded&) {
        have_exact = false;
    }
    Histogram h = empirical_distribution(d, cfg.steps, cfg.samples, cfg.seed, have_exact ? &exact : nullptr, cfg.threads);
    json j = report_head(cfg, "uniformity");
    j["samples"] = h.samples;
    j["states"] = h.states;
    if (h.chi_square) {
        j["chi_square"] = *h.chi_square;
        j["p_value"] = *h.p_value;
    }
    auto bins = json::array();
    for (auto& [r, c] : h.counts) bins.push_back({{"edges", edges_json(r.edges())}, {"count", c}});
    j["histogram"] = bins;
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

json point_json(const PathPoint& p)
{
    json j;
    j["k"] = p.k;
    j["r"] = p.r;
    j["q"] = p.q;
    j["line"] = p.line ? json(line_name(*p.line)) : json(nullptr);
    j["milestone"] = p.milestone;
    j["cornerstone"] = p.cornerstone;
    j["R"] = edges_json(p.R);
    j["z"] = edges_json(p.z.edges());
    return j;
}

int cmd_decompose(const RunConfig& cfg)
{
    DegreeSequence d = read_degree_sequence_file(cfg.seq);
    if (!is_graphical(d)) throw NotGraphical(d.to_text() + " is not graphical");
    auto model = ChordModel::for_sequence(d);
    Realization x = parse_edge_list(read_file(cfg.x_file), model);
    Realization y = parse_edge_list(read_file(cfg.y_file), model);
    if (x.degrees() != d.label_degrees() || y.degrees() != d.label_degrees())
        throw ModelMismatch("edge lists do not realize " + d.to_text());
    RedBlueGraph rb = symmetric_difference(x, y);
    BigInt count = count_matchings(rb);
    BigInt index = 0;
    if (cfg.matching != "auto") {
        try {
            index = BigInt(cfg.matching);
        } catch (const std::exception&) {
            throw ParseError("--matching expects 'auto' or an index, got '" + cfg.matching + "'");
        }
    }
    MatchingParameter s = matching_from_index(rb, index);
    CanonicalPath cp = canonical_path(x, y, s);

    std::ostringstream os;
    json head = report_head(cfg, "canonical_path");
    head["matchings"] = count.str();
    head["matching_index"] = index.str();
    head["path_length"] = cp.length();
    os << head.dump() << "\n";
    json circ;
    circ["kind"] = "circuits";
    circ["circuits"] = to_json(cp.circuits);
    os << circ.dump() << "\n";
    for (auto& pd : cp.primitive) {
        for (auto& line : trace_lines(pd)) {
            json l;
            l["kind"] = "round";
            l.update(line);
            os << l.dump() << "\n";
        }
        for (auto& c : pd.circuits)
            os << json{{"kind", "primitive"}, {"k", c.k}, {"r", c.r}, {"vertices", c.vertices}}.dump() << "\n";
    }
    for (auto& p : cp.points) {
        json l;
        l["kind"] = "point";
        l.update(point_json(p));
        os << l.dump() << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

int cmd_verify_flow(const RunConfig& cfg)
{
    DegreeSequence d = read_degree_sequence_file(cfg.seq);
    MarkovGraph mg = build_markov_graph(d, cfg.cap);
    Spectrum sp = spectral(mg);
    FlowReport fr = congestion(mg, sp, cfg.threads);
    json j = report_head(cfg, "flow_congestion");
    j["sequence"] = d.to_text();
    j["report"] = fr.to_json();
    if (fr.witness_from >= 0)
        j["report"]["max_load_edge"]["states"] = {edges_json(mg.states[fr.witness_from].edges()),
                                                  edges_json(mg.states[fr.witness_to].edges())};
    const std::string text = j.dump(2) + "\n";
    if (!cfg.report.empty()) {
        std::ofstream f(cfg.report);
        if (!f) throw PreconditionViolation("cannot write " + cfg.report);
        f << text;
    } else {
        std::cout << text;
    }
    if (!fr.holds) throw InvariantViolation("relaxation time exceeds the congestion bound");
    return 0;
}

int cmd_mix_analyze(const RunConfig& cfg)
{
    DegreeSequence d = read_degree_sequence_file(cfg.seq);
    MarkovGraph mg = build_markov_graph(d, cfg.cap);
    Spectrum sp = spectral(mg);
    json j = report_head(cfg, "mixing");
    j["sequence"] = d.to_text();
    j["N"] = mg.size();
    j["eigenvalues"] = sp.eigenvalues;
    j["lambda2"] = sp.lambda2;
    j["tau_rel"] = sp.tau_rel;
    j["residual"] = sp.residual;
    auto checks = json::array();
    bool ok = true;
    for (double eps : parse_doubles(cfg.eps)) {
        if (!(eps > 0 && eps < 1)) throw PreconditionViolation("eps must lie in (0, 1)");
        MixingCheck mc = mixing_check(mg, sp, eps);
        ok = ok && mc.holds;
        checks.push_back({{"eps", eps}, {"t", mc.t}, {"tv_distance", mc.distance}, {"holds", mc.holds}});
    }
    j["mixing_bound"] = checks;
    emit(cfg, j.dump(2) + "\n");
    if (!ok) throw InvariantViolation("total variation above eps at the relaxation bound");
    return 0;
}

int cmd_stability(const RunConfig& cfg)
{
    json j = report_head(cfg, "stability");
    if (!cfg.seq.empty()) {
        DegreeSequence d = read_degree_sequence_file(cfg.seq);
        j["sequence"] = d.to_text();
        auto verdicts = json::array();
        if (cfg.region == "powerlaw" || cfg.gamma_set) {
            verdicts.push_back(power_law_check(d, cfg.gamma, cfg.kconst).to_json());
        }
        if (cfg.region != "powerlaw") {
            for (auto& id : region_ids()) {
                bool wanted = cfg.region == "all" ? region_applies(id, d.model)
                              : cfg.region == "dir-*" ? id.rfind("dir-", 0) == 0
                                                      : id == cfg.region;
                if (wanted) verdicts.push_back(region_check(d, id).to_json());
            }
            if (verdicts.empty()) throw PreconditionViolation("unknown region " + cfg.region);
        }
        j["verdicts"] = verdicts;
    }
    if (!cfg.er.empty()) {
        auto v = parse_doubles(cfg.er);
        if (v.size() != 3) throw ParseError("--er expects n,p,trials");
        ErReport r = er_corollary_check(static_cast<int>(v[0]), v[1], static_cast<std::uint64_t>(v[2]), cfg.seed,
                                        cfg.threads);
        j["er"] = r.to_json();
    }
    if (cfg.seq.empty() && cfg.er.empty()) throw PreconditionViolation("stability-check needs --seq or --er");
    emit(cfg, j.dump(2) + "\n");
    return 0;
}

void print_error(const std::string& kind, const std::string& message)
{
    json j;
    j["schema"] = 1;
    j["error"] = {{"kind", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    if (const char* env = std::getenv("SWCHAIN_CAP")) {
        try {
            cfg.cap = std::stoull(env);
        } catch (const std::exception&) {
            print_error("ParseError", std::string("SWCHAIN_CAP is not a count: ") + env);
            return 2;
        }
    }

    CLI::App app{"Switch Markov chain sampler and verifier"};
    app.require_subcommand(1);
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg.cap, "state-space cap (default from SWCHAIN_CAP)");
    app.add_flag("-v,--verbose", cfg.verbosity);

    auto* sample = app.add_subcommand("sample", "run the switch chain");
    sample->add_option("--seq", cfg.seq, "degree sequence file")->required();
    sample->add_option("--steps", cfg.steps, "steps per walk")->required();
    sample->add_option("--seed", cfg.seed, "random seed")->required();
    sample->add_option("--samples", cfg.samples, "independent walks; reports a chi-squared histogram");
    sample->add_option("--out", cfg.out, "output file (default stdout)");
    sample->add_option("--format", cfg.format, "edge list or JSON")->check(CLI::IsMember({"edges", "json"}));

    auto* decompose = app.add_subcommand("decompose", "circuits, primitive circuits and the canonical path");
    decompose->add_option("--seq", cfg.seq, "degree sequence file")->required();
    decompose->add_option("--x", cfg.x_file, "edge list of the start realization")->required();
    decompose->add_option("--y", cfg.y_file, "edge list of the target realization")->required();
    decompose->add_option("--matching", cfg.matching, "auto, or an index into the matchings of X xor Y");
    decompose->add_option("--out", cfg.out, "output file (default stdout)");

    auto* flow = app.add_subcommand("verify-flow", "exact congestion of the canonical paths");
    flow->add_option("--seq", cfg.seq, "degree sequence file")->required();
    flow->add_option("--report", cfg.report, "report file (default stdout)");

    auto* mix = app.add_subcommand("mix-analyze", "spectrum and total-variation check");
    mix->add_option("--seq", cfg.seq, "degree sequence file")->required();
    mix->add_option("--eps", cfg.eps, "comma-separated accuracies");
    mix->add_option("--out", cfg.out, "output file (default stdout)");

    auto* stab = app.add_subcommand("stability-check", "degree-sequence region predicates");
    stab->add_option("--seq", cfg.seq, "degree sequence file");
    stab->add_option("--region", cfg.region, "all, a region id, dir-* or powerlaw");
    stab->add_option("--gamma", cfg.gamma, "power-law exponent")->each([&](const std::string&) { cfg.gamma_set = true; });
    stab->add_option("--kconst", cfg.kconst, "power-law constant K");
    stab->add_option("--er", cfg.er, "random-graph membership frequency: n,p,trials");
    stab->add_option("--seed", cfg.seed, "random seed");
    stab->add_option("--out", cfg.out, "output file (default stdout)");

    for (auto* sc : {sample, decompose, flow, mix, stab}) {
        sc->add_option("--cap", cfg.cap, "state-space cap");
        sc->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("UsageError", e.what());
        return 2;
    }

    try {
        if (*sample) return cfg.subcommand = "sample", cmd_sample(cfg);
        if (*decompose) return cfg.subcommand = "decompose", cmd_decompose(cfg);
        if (*flow) return cfg.subcommand = "verify-flow", cmd_verify_flow(cfg);
        if (*mix) return cfg.subcommand = "mix-analyze", cmd_mix_analyze(cfg);
        if (*stab) return cfg.subcommand = "stability-check", cmd_stability(cfg);
    } catch (const ValidationError& e) {
        print_error(e.kind(), e.what());
        return 2;
    } catch (const InvariantError& e) {
        print_error(e.kind(), e.what());
        return 1;
    } catch (const std::exception& e) {
        print_error("InternalInvariant", e.what());
        return 1;
    }
    return 0;
}

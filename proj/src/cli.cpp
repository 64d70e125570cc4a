#include "mpbn/cli.hpp"

#include "mpbn/bnet.hpp"
#include "mpbn/error.hpp"
#include "mpbn/mp.hpp"
#include "mpbn/randgen.hpp"
#include "mpbn/refinement.hpp"
#include "mpbn/report.hpp"
#include "mpbn/trap_spaces.hpp"
#include "mpbn/update.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

namespace mpbn::cli {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double millis_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Options {
    bool json = false;
    std::size_t threads = 1;
    double timeout = 0;  // seconds; 0 = none

    std::string model;
    std::string from;
    std::string to;
    std::size_t limit = 1000;
    bool witness = false;
    std::string mode;
    std::size_t state_cap = kDefaultStateCap;
    std::string mn_path;
    std::size_t n = 0;
    std::uint64_t seed = 1;
    std::size_t attachment = 2;
    double sign_bias = 0.5;
    std::string task;
    std::size_t repeat = 1;
};

struct Outcome {
    int code = kOk;
    std::string text;
};

std::optional<Clock::time_point> deadline_of(const Options& o, Clock::time_point start) {
    if (o.timeout <= 0) return std::nullopt;
    return start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(o.timeout));
}

std::vector<std::string> texts(const std::vector<TrapSpace>& spaces) {
    std::vector<std::string> out;
    for (const auto& t : spaces) out.push_back(t.hypercube.to_string());
    return out;
}

std::vector<std::string> texts(const std::vector<Configuration>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_string());
    return out;
}

std::string lines(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& item : items) s += item + "\n";
    return s;
}

// ── Commands ────────────────────────────────────────────────────────────────

Outcome cmd_attractors(const Options& o, Report& r, Clock::time_point start) {
    const auto model = load_model(o.model);
    r.set_model(model);
    r.parameters = {{"limit", o.limit}, {"threads", o.threads}, {"timeout", o.timeout}};
    r.parameters["from"] = o.from.empty() ? json(nullptr) : json(o.from);
    EnumerationOptions opts;
    opts.limit = o.limit;
    opts.threads = o.threads;
    opts.deadline = deadline_of(o, start);
    const auto t0 = Clock::now();
    EnumerationResult res;
    if (o.from.empty()) {
        res = enumerate_minimal_trap_spaces(model.net, Hypercube(model.net.size()), opts);
    } else {
        res = reachable_attractors(model.net, parse_configuration(model.net, o.from), opts);
    }
    r.timings["compute_ms"] = millis_since(t0);
    const auto found = texts(res.trap_spaces);
    r.results = {{"attractors", found}, {"count", found.size()}, {"minimal", true}};
    r.results["from"] = r.parameters["from"];
    r.incomplete = !res.complete;
    return {res.complete ? kOk : kUsage, lines(found)};
}

Outcome cmd_reach(const Options& o, Report& r) {
    const auto model = load_model(o.model);
    r.set_model(model);
    r.parameters = {{"from", o.from}, {"to", o.to}, {"witness", o.witness}};
    const auto x = parse_configuration(model.net, o.from);
    const auto y = parse_configuration(model.net, o.to);
    const auto t0 = Clock::now();
    const ReachTrace trace = mp_reach_trace(model.net, x, y);
    r.results = {{"reachable", trace.reachable}, {"rounds", trace.rounds.size()},
                 {"openings", trace.total_openings()}};
    std::string text = trace.reachable ? "reachable\n" : "not reachable\n";
    if (o.witness && trace.reachable) {
        std::vector<std::string> path;
        for (const auto& w : mp_witness_path(model.net, x, y)) path.push_back(w.to_string());
        r.results["witness"] = path;
        text += lines(path);
    }
    r.timings["compute_ms"] = millis_since(t0);
    return {trace.reachable ? kOk : kFails, text};
}

Outcome cmd_fixpoints(const Options& o, Report& r) {
    const auto model = load_model(o.model);
    r.set_model(model);
    r.parameters = {{"limit", o.limit}};
    const auto t0 = Clock::now();
    const auto found = texts(mp_fixed_points(model.net, o.limit));
    r.timings["compute_ms"] = millis_since(t0);
    r.results = {{"fixpoints", found}, {"count", found.size()}};
    return {kOk, lines(found)};
}

Outcome cmd_oracle(const Options& o, Report& r) {
    const auto model = load_model(o.model);
    r.set_model(model);
    const auto mode = parse_update_mode(o.mode);
    if (!mode) throw Error("unknown mode \"" + o.mode + "\" (expected sync, async or fullasync)");
    r.parameters = {{"mode", to_string(*mode)}, {"from", o.from}, {"state_cap", o.state_cap}};
    r.parameters["to"] = o.to.empty() ? json(nullptr) : json(o.to);
    const auto x = parse_configuration(model.net, o.from);
    const auto t0 = Clock::now();
    const auto reach = reach_set(model.net, *mode, x, o.state_cap);
    r.timings["compute_ms"] = millis_since(t0);
    const auto found = texts(reach);
    r.results = {{"mode", to_string(*mode)}, {"reach_set", found}, {"count", found.size()}};
    if (o.to.empty()) return {kOk, lines(found)};
    const auto y = parse_configuration(model.net, o.to);
    const bool reachable = std::binary_search(reach.begin(), reach.end(), y);
    r.results["reachable"] = reachable;
    return {reachable ? kOk : kFails, reachable ? "reachable\n" : "not reachable\n"};
}

Outcome cmd_encode_sync(const Options& o, Report& r) {
    const auto model = load_model(o.model);
    r.set_model(model);
    const auto t0 = Clock::now();
    const auto encoded = sync_to_async_encode(model.net);
    r.timings["compute_ms"] = millis_since(t0);
    const std::string text = render_bnet(encoded);
    r.results = {{"network", network_to_json(encoded)}, {"bnet", text}};
    return {kOk, text};
}

Outcome cmd_witness_mn(const Options& o, Report& r) {
    const auto model = load_model(o.model);
    r.set_model(model);
    r.parameters = {{"from", o.from}, {"to", o.to}};
    const auto x = parse_configuration(model.net, o.from);
    const auto y = parse_configuration(model.net, o.to);
    const auto t0 = Clock::now();
    if (!mp_reach_decide(model.net, x, y)) {
        r.results = {{"reachable", false}};
        r.timings["compute_ms"] = millis_since(t0);
        return {kFails, "not reachable\n"};
    }
    const auto F = build_reach_witness(model.net, x, y);
    const bool refines = check_refinement(F, model.net);
    const bool reaches = mv_reachable(F, MVConfiguration(x, F.max_value()), MVConfiguration(y, F.max_value()));
    r.timings["compute_ms"] = millis_since(t0);
    r.results = {{"reachable", true}, {"mn", to_json(F)}, {"refines", refines}, {"reaches", reaches}};
    return {refines && reaches ? kOk : kFails, to_json(F).dump(2) + "\n"};
}

Outcome cmd_check_refinement(const Options& o, Report& r) {
    const auto model = load_model(o.model);
    r.set_model(model);
    r.parameters = {{"mn", o.mn_path}, {"state_cap", o.state_cap}};
    std::ifstream in(o.mn_path);
    if (!in) throw Error("cannot open " + o.mn_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(o.mn_path + ": " + e.what());
    }
    const auto F = multivalued_from_json(j, model.net);
    const auto t0 = Clock::now();
    const auto violation = find_refinement_violation(F, model.net, o.state_cap);
    r.timings["compute_ms"] = millis_since(t0);
    r.results = {{"refines", !violation}};
    if (!violation) return {kOk, "refines\n"};
    r.results["violation"] = {{"state", violation->state.to_string()},
                              {"component", model.net.name(violation->component)},
                              {"delta", violation->delta}};
    return {kFails, "does not refine: F_" + model.net.name(violation->component) + "(" +
                        violation->state.to_string() + ") = " + std::to_string(violation->delta) +
                        " has no justifying binarization\n"};
}

Outcome cmd_rand(const Options& o, Report& r) {
    r.parameters = {{"n", o.n}, {"seed", o.seed}, {"attachment", o.attachment}, {"sign_bias", o.sign_bias}};
    const auto t0 = Clock::now();
    const auto graph = generate_scale_free(o.n, o.seed, {o.attachment, o.sign_bias});
    const std::string text = render_bnet(inhibitor_dominant(graph));
    r.timings["compute_ms"] = millis_since(t0);
    r.results = {{"edges", graph.edges.size()}, {"bnet", text}};
    return {kOk, text};
}

Outcome cmd_bench(const Options& o, Report& r, Clock::time_point start) {
    std::optional<BooleanNetwork> net;
    if (!o.model.empty()) {
        const auto model = load_model(o.model);
        r.set_model(model);
        net = model.net;
    } else {
        if (o.n < 2) throw Error("bench needs a model or --n >= 2");
        net = inhibitor_dominant(generate_scale_free(o.n, o.seed, {o.attachment, o.sign_bias}));
    }
    r.parameters = {{"task", o.task}, {"seed", o.seed}, {"repeat", o.repeat}, {"limit", o.limit}};
    std::mt19937_64 rng(o.seed);
    auto random_configuration = [&] {
        Configuration x(net->size());
        for (std::size_t i = 0; i < x.size(); ++i) x.set(i, rng() & 1U);
        return x;
    };
    std::string csv = "task,n,seed,millis\n";
    json rows = json::array();
    bool complete = true;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(o.repeat, 1); ++rep) {
        EnumerationOptions opts;
        opts.threads = o.threads;
        opts.deadline = deadline_of(o, start);
        const auto t0 = Clock::now();
        if (o.task == "attractor" || o.task == "attractors") {
            opts.limit = o.task == "attractor" ? 1 : o.limit;
            complete = enumerate_minimal_trap_spaces(*net, Hypercube(net->size()), opts).complete && complete;
        } else if (o.task == "fixpoints") {
            mp_fixed_points(*net, o.limit);
        } else if (o.task == "reach") {
            const auto x = random_configuration();
            const auto y = random_configuration();
            mp_reach_decide(*net, x, y);
        } else {
            throw Error("unknown bench task \"" + o.task + "\" (attractor, attractors, fixpoints, reach)");
        }
        const double ms = millis_since(t0);
        std::ostringstream row;
        row << o.task << ',' << net->size() << ',' << o.seed << ',' << ms;
        csv += row.str() + "\n";
        rows.push_back({{"task", o.task}, {"n", net->size()}, {"seed", o.seed}, {"millis", ms}});
    }
    r.results = {{"rows", rows}};
    r.incomplete = !complete;
    return {complete ? kOk : kUsage, csv};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    Options o;
    CLI::App app{"Most-permissive analysis of Boolean networks", "mpbn"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Print a JSON report");
    app.add_option("--threads", o.threads, "Enumeration workers")->check(CLI::Range(1, 64));
    app.add_option("--timeout", o.timeout, "Enumeration time limit in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber);

    auto* attractors = app.add_subcommand("attractors", "Attractors (minimal trap spaces)");
    attractors->add_option("model", o.model, ".bnet file")->required();
    attractors->add_option("--limit", o.limit, "Maximum number reported");
    attractors->add_option("--from", o.from, "Only attractors reachable from CONFIG");

    auto* reach = app.add_subcommand("reach", "Decide most-permissive reachability");
    reach->add_option("model", o.model, ".bnet file")->required();
    reach->add_option("--from", o.from, "Initial CONFIG")->required();
    reach->add_option("--to", o.to, "Target CONFIG")->required();
    reach->add_flag("--witness", o.witness, "Print a witness trajectory");

    auto* fixpoints = app.add_subcommand("fixpoints", "Fixed points");
    fixpoints->add_option("model", o.model, ".bnet file")->required();
    fixpoints->add_option("--limit", o.limit, "Maximum number reported");

    auto* oracle = app.add_subcommand("oracle", "Explicit-state reachability under a classical update mode");
    oracle->add_option("model", o.model, ".bnet file")->required();
    oracle->add_option("--mode", o.mode, "sync, async or fullasync")->required();
    oracle->add_option("--from", o.from, "Initial CONFIG")->required();
    oracle->add_option("--to", o.to, "Target CONFIG");
    oracle->add_option("--state-cap", o.state_cap, "Maximum explored states");

    auto* encode = app.add_subcommand("encode-sync", "Asynchronous network simulating the synchronous dynamics");
    encode->add_option("model", o.model, ".bnet file")->required();

    auto* witness = app.add_subcommand("witness-mn", "Multivalued refinement witnessing a reachability");
    witness->add_option("model", o.model, ".bnet file")->required();
    witness->add_option("--from", o.from, "Initial CONFIG")->required();
    witness->add_option("--to", o.to, "Target CONFIG")->required();

    auto* check = app.add_subcommand("check-refinement", "Check that a multivalued network refines the model");
    check->add_option("model", o.model, ".bnet file")->required();
    check->add_option("mn", o.mn_path, "Multivalued network JSON")->required();
    check->add_option("--state-cap", o.state_cap, "Maximum (m+1)^n scanned");

    auto* rand = app.add_subcommand("rand", "Random scale-free inhibitor-dominant network");
    rand->add_option("--n", o.n, "Number of components")->required()->check(CLI::Range(2, 100000000));
    rand->add_option("--seed", o.seed, "Random seed");
    rand->add_option("--attachment", o.attachment, "Links per new node")->check(CLI::PositiveNumber);
    rand->add_option("--sign-bias", o.sign_bias, "Probability of activation")->check(CLI::Range(0.0, 1.0));

    auto* bench = app.add_subcommand("bench", "Time one task; CSV task,n,seed,millis");
    bench->add_option("model", o.model, ".bnet file (omit to generate with --n)");
    bench->add_option("--task", o.task, "attractor, attractors, fixpoints or reach")->required();
    bench->add_option("--n", o.n, "Generated network size");
    bench->add_option("--seed", o.seed, "Random seed");
    bench->add_option("--attachment", o.attachment, "Links per new node")->check(CLI::PositiveNumber);
    bench->add_option("--sign-bias", o.sign_bias, "Probability of activation")->check(CLI::Range(0.0, 1.0));
    bench->add_option("--limit", o.limit, "Enumeration limit for the attractors task");
    bench->add_option("--repeat", o.repeat, "Repetitions");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Report report;
    Outcome outcome;
    try {
        if (attractors->parsed()) {
            report.command = "attractors";
            outcome = cmd_attractors(o, report, start);
        } else if (reach->parsed()) {
            report.command = "reach";
            outcome = cmd_reach(o, report);
        } else if (fixpoints->parsed()) {
            report.command = "fixpoints";
            outcome = cmd_fixpoints(o, report);
        } else if (oracle->parsed()) {
            report.command = "oracle";
            outcome = cmd_oracle(o, report);
        } else if (encode->parsed()) {
            report.command = "encode-sync";
            outcome = cmd_encode_sync(o, report);
        } else if (witness->parsed()) {
            report.command = "witness-mn";
            outcome = cmd_witness_mn(o, report);
        } else if (check->parsed()) {
            report.command = "check-refinement";
            outcome = cmd_check_refinement(o, report);
        } else if (rand->parsed()) {
            report.command = "rand";
            outcome = cmd_rand(o, report);
        } else {
            report.command = "bench";
            outcome = cmd_bench(o, report, start);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    report.timings["total_ms"] = millis_since(start);
    if (o.json) {
        out << report.to_json().dump(2) << "\n";
    } else {
        out << outcome.text;
        if (report.incomplete) err << "warning: time limit reached, results are partial\n";
    }
    return outcome.code;
}

}  // namespace mpbn::cli

// mixbiotic: command-line front end for network generation, communication
// simulation, phase sweeps and dataset measures.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 contract violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixbiotic/commsim.hpp"
#include "mixbiotic/graph.hpp"
#include "mixbiotic/ingest.hpp"
#include "mixbiotic/io.hpp"
#include "mixbiotic/measures.hpp"
#include "mixbiotic/netgen.hpp"
#include "mixbiotic/svg.hpp"
#include "mixbiotic/sweep.hpp"

using namespace mixbiotic;
using io::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NetworkFlags {
    std::string model = "ws";
    int n = 100;
    int k = -1; // model default: 4 for ws, 2 for ba
    double p = 0.7;
    int na = 3;

    NetworkSpec spec() const {
        if (model == "ws")
            return WsParams{n, k < 0 ? 4 : k, p};
        if (model == "ba")
            return BaParams{n, na, k < 0 ? 2 : k};
        throw UsageError("--model must be ws or ba");
    }

    json echo() const {
        const auto s = spec();
        if (const auto* ws = std::get_if<WsParams>(&s))
            return {{"model", "ws"}, {"n", ws->n}, {"k", ws->k}, {"p", ws->p}};
        const auto& ba = std::get<BaParams>(s);
        return {{"model", "ba"}, {"n", ba.n}, {"na", ba.n_a}, {"k", ba.k}};
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "network model: ws or ba")->capture_default_str();
        cmd->add_option("--n", n, "vertex count")->capture_default_str();
        cmd->add_option("--k", k, "ws: lattice degree (default 4); ba: edges per new vertex (default 2)");
        cmd->add_option("--p", p, "ws rewiring probability")->capture_default_str();
        cmd->add_option("--na", na, "ba initial complete-graph size")->capture_default_str();
    }
};

struct EventFlags {
    std::string format = "auto";
    int time_col = 0, src_col = 1, dst_col = 2;
    bool directed = false;

    FormatConfig config() const {
        FormatConfig fmt;
        if (format == "auto")
            fmt.delimiter = Delimiter::Auto;
        else if (format == "whitespace")
            fmt.delimiter = Delimiter::Whitespace;
        else if (format == "comma")
            fmt.delimiter = Delimiter::Comma;
        else
            throw UsageError("--format must be auto, whitespace or comma");
        fmt.time_col = time_col;
        fmt.src_col = src_col;
        fmt.dst_col = dst_col;
        fmt.directed = directed;
        return fmt;
    }

    json echo() const {
        return {{"format", format}, {"time_col", time_col}, {"src_col", src_col}, {"dst_col", dst_col},
                {"directed", directed}};
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "delimiter: auto, whitespace or comma")->capture_default_str();
        cmd->add_option("--time-col", time_col, "time column (0-based)")->capture_default_str();
        cmd->add_option("--src-col", src_col, "source column (0-based)")->capture_default_str();
        cmd->add_option("--dst-col", dst_col, "destination column (0-based)")->capture_default_str();
        cmd->add_flag("--directed", directed, "events are directed messages");
    }
};

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        io::write_file(path, content);
}

void print_config(const json& cfg) { std::cerr << cfg.dump() << '\n'; }

Graph load_graph(const std::string& path) {
    try {
        return io::graph_from_json(json::parse(io::read_file(path)));
    } catch (const json::exception& e) {
        throw io::FormatError("graph '" + path + "': " + e.what());
    }
}

std::string label_of(const std::string& path, const json& j) {
    if (j.contains("label") && j["label"].is_string())
        return j["label"].get<std::string>();
    return std::filesystem::path(path).stem().string();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Communication-pattern simulation and mixbiotic measures"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a WS or BA network as graph JSON");
    NetworkFlags gen_net;
    gen_net.attach(gen);
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    gen->add_option("--out", gen_out, "graph JSON path (stdout if omitted)");

    // stats
    auto* stats = app.add_subcommand("stats", "graph features of a graph JSON or an event file");
    std::string stats_graph, stats_events, stats_out;
    EventFlags stats_fmt;
    auto* stats_graph_opt = stats->add_option("--graph", stats_graph, "graph JSON");
    stats->add_option("--events", stats_events, "event file")->excludes(stats_graph_opt);
    stats_fmt.attach(stats);
    stats->add_option("--out", stats_out, "JSON output path (stdout if omitted)");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run the communication model");
    NetworkFlags sim_net;
    sim_net.attach(sim);
    std::string sim_graph, sim_out, sim_measures;
    SimConfig sim_cfg;
    int sim_trials = 1;
    std::uint64_t sim_seed = 1;
    sim->add_option("--graph", sim_graph, "graph JSON (otherwise generated per trial from --model flags)");
    sim->add_option("--g", sim_cfg.g, "generation rate")->capture_default_str();
    sim->add_option("--d", sim_cfg.d, "disappearance rate")->capture_default_str();
    sim->add_option("--u", sim_cfg.u, "information unit")->capture_default_str();
    sim->add_option("--tmax", sim_cfg.t_max, "iterations")->capture_default_str();
    sim->add_option("--n0", sim_cfg.n_0, "initially informed vertices")->capture_default_str();
    sim->add_option("--seed", sim_seed, "base seed")->capture_default_str();
    sim->add_option("--trials", sim_trials, "trials to average")->capture_default_str();
    sim->add_option("--out", sim_out, "trace CSV of the first trial");
    sim->add_option("--measures", sim_measures, "MeasureSet JSON path (stdout if omitted)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "(g, d) mesh sweep with phase labels");
    NetworkFlags sweep_net;
    sweep_net.attach(sweep);
    SweepConfig sweep_cfg;
    std::string sweep_mesh = "default", sweep_out, sweep_svg, sweep_meta;
    sweep->add_option("--trials", sweep_cfg.trials, "trials per mesh point")->capture_default_str();
    sweep->add_option("--u", sweep_cfg.u, "information unit")->capture_default_str();
    sweep->add_option("--tmax", sweep_cfg.t_max, "iterations")->capture_default_str();
    sweep->add_option("--n0", sweep_cfg.n_0, "initially informed vertices")->capture_default_str();
    sweep->add_option("--seed", sweep_cfg.base_seed, "base seed")->capture_default_str();
    sweep->add_option("--threshold", sweep_cfg.nihilism_threshold, "nihilism threshold")->capture_default_str();
    sweep->add_option("--mesh", sweep_mesh, "default | grid | file:<path>")->capture_default_str();
    sweep->add_option("--threads", sweep_cfg.threads, "worker threads (0 = all cores)")->capture_default_str();
    sweep->add_flag("--fixed-network", sweep_cfg.fixed_network, "one network for every trial");
    sweep->add_option("--out", sweep_out, "grid CSV (stdout if omitted)");
    sweep->add_option("--svg", sweep_svg, "phase diagram SVG");
    sweep->add_option("--meta", sweep_meta, "metadata JSON (default <out>.meta.json when --out is set)");

    // measure
    auto* measure = app.add_subcommand("measure", "measures of an event dataset");
    std::string measure_events, measure_out, measure_trace, measure_label;
    EventFlags measure_fmt;
    double measure_u = 1.0;
    bool receiver_only = false;
    measure->add_option("--events", measure_events, "event file")->required();
    measure_fmt.attach(measure);
    measure->add_option("--u", measure_u, "information unit")->capture_default_str();
    measure->add_flag("--receiver-only", receiver_only, "directed logs: only receivers count");
    measure->add_option("--label", measure_label, "label stored in the output");
    measure->add_option("--out", measure_out, "MeasureSet JSON (stdout if omitted)");
    measure->add_option("--trace-out", measure_trace, "sparse trace JSON lines");

    // trajectory
    auto* traj = app.add_subcommand("trajectory", "polar trajectory of a trace");
    std::string traj_trace, traj_events, traj_out, traj_svg;
    EventFlags traj_fmt;
    double traj_u = 1.0;
    auto* traj_trace_opt = traj->add_option("--trace", traj_trace, "trace CSV or sparse JSON lines");
    traj->add_option("--events", traj_events, "event file")->excludes(traj_trace_opt);
    traj_fmt.attach(traj);
    traj->add_option("--u", traj_u, "information unit for --events")->capture_default_str();
    traj->add_option("--out", traj_out, "polar CSV (stdout if omitted)");
    traj->add_option("--svg", traj_svg, "trajectory SVG");

    // radar
    auto* radar = app.add_subcommand("radar", "normalized radar comparison of MeasureSet JSONs");
    std::vector<std::string> radar_inputs;
    std::string radar_out, radar_svg;
    radar->add_option("inputs", radar_inputs, "MeasureSet JSON files")->required();
    radar->add_option("--out", radar_out, "normalized CSV (stdout if omitted)");
    radar->add_option("--svg", radar_svg, "radar SVG");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*gen) {
            print_config({{"command", "gen"}, {"network", gen_net.echo()}, {"seed", gen_seed}});
            const auto g = generate(gen_net.spec(), gen_seed);
            emit(gen_out, io::to_json(g).dump() + "\n");
        } else if (*stats) {
            if (stats_graph.empty() && stats_events.empty())
                throw UsageError("stats needs --graph or --events");
            json out;
            if (!stats_graph.empty()) {
                print_config({{"command", "stats"}, {"graph", stats_graph}});
                out = io::to_json(graph_stats(load_graph(stats_graph)));
            } else {
                print_config({{"command", "stats"}, {"events", stats_events}, {"format", stats_fmt.echo()}});
                const auto [log, meta] = parse_events_file(stats_events, stats_fmt.config());
                out = io::to_json(graph_stats(aggregate_graph(log)));
                const json meta_json = io::to_json(meta);
                for (const auto& [key, value] : meta_json.items())
                    out[key] = value;
            }
            emit(stats_out, out.dump(2) + "\n");
        } else if (*sim) {
            if (sim_trials < 1)
                throw std::invalid_argument("--trials must be at least 1");
            print_config({{"command", "simulate"},
                          {"network", sim_graph.empty() ? sim_net.echo() : json(sim_graph)},
                          {"g", sim_cfg.g},
                          {"d", sim_cfg.d},
                          {"u", sim_cfg.u},
                          {"tmax", sim_cfg.t_max},
                          {"n0", sim_cfg.n_0},
                          {"seed", sim_seed},
                          {"trials", sim_trials},
                          {"seed_rule", "trial k: network derive(derive(seed,0,k),0), simulation derive(derive(seed,0,k),1)"}});
            std::optional<Graph> fixed;
            if (!sim_graph.empty())
                fixed = load_graph(sim_graph);
            std::vector<MeasureSetD> sets;
            for (int t = 0; t < sim_trials; ++t) {
                const auto seeds = trial_seeds(sim_seed, 0, static_cast<std::size_t>(t));
                const Graph graph = fixed ? *fixed : generate(sim_net.spec(), seeds.network);
                SimConfig cfg = sim_cfg;
                cfg.seed = seeds.simulation;
                const auto trace = run_sim(cfg, graph);
                if (t == 0 && !sim_out.empty()) {
                    std::ostringstream csv;
                    io::write_trace_csv(csv, trace.states);
                    io::write_file(sim_out, csv.str());
                }
                if (cfg.t_max >= 1)
                    sets.push_back(series_measures(trace.states, cfg.u));
            }
            if (sets.empty())
                throw std::invalid_argument("--tmax must be at least 1 to compute measures");
            auto out = io::to_json(average(sets));
            out["trials"] = sim_trials;
            emit(sim_measures, out.dump(2) + "\n");
        } else if (*sweep) {
            sweep_cfg.network = sweep_net.spec();
            std::vector<MeshPoint> mesh;
            if (sweep_mesh == "default")
                mesh = build_mesh(MeshSpec::default_mesh());
            else if (sweep_mesh == "grid")
                mesh = build_mesh(MeshSpec::grid_only());
            else if (sweep_mesh.starts_with("file:")) {
                std::istringstream in(io::read_file(sweep_mesh.substr(5)));
                MeshSpec spec;
                spec.include_grid = false;
                spec.extra_points = io::read_mesh(in);
                mesh = build_mesh(spec);
            } else
                throw UsageError("--mesh must be default, grid or file:<path>");
            const json meta = {{"command", "sweep"},
                               {"network", sweep_net.echo()},
                               {"trials", sweep_cfg.trials},
                               {"u", sweep_cfg.u},
                               {"tmax", sweep_cfg.t_max},
                               {"n0", sweep_cfg.n_0},
                               {"seed", sweep_cfg.base_seed},
                               {"threshold", sweep_cfg.nihilism_threshold},
                               {"mesh", sweep_mesh},
                               {"mesh_points", mesh.size()},
                               {"fixed_network", sweep_cfg.fixed_network},
                               {"seed_rule", "point i, trial k: network derive(derive(seed,i,k),0), "
                                             "simulation derive(derive(seed,i,k),1)"}};
            print_config(meta);
            const auto grid = run_sweep(sweep_cfg, mesh);
            std::ostringstream csv;
            io::write_grid_csv(csv, grid);
            emit(sweep_out, csv.str());
            if (sweep_meta.empty() && !sweep_out.empty() && sweep_out != "-")
                sweep_meta = sweep_out + ".meta.json";
            if (!sweep_meta.empty())
                io::write_file(sweep_meta, meta.dump(2) + "\n");
            if (!sweep_svg.empty())
                io::write_file(sweep_svg, render_phase_svg(grid));
        } else if (*measure) {
            print_config({{"command", "measure"},
                          {"events", measure_events},
                          {"format", measure_fmt.echo()},
                          {"u", measure_u},
                          {"receiver_only", receiver_only}});
            const auto [log, meta] = parse_events_file(measure_events, measure_fmt.config());
            const auto incidence = receiver_only ? Incidence::ReceiverOnly : Incidence::Both;
            if (!measure_trace.empty()) {
                std::ofstream trace_out(measure_trace, std::ios::binary);
                if (!trace_out)
                    throw io::FormatError("cannot write '" + measure_trace + "'");
                for_each_snapshot(log, measure_u, incidence,
                                  [&](long t, const SparseSnapshot& q) { io::write_sparse_row(trace_out, t, q); });
            }
            auto out = io::to_json(dataset_measures(log, measure_u, incidence));
            out["label"] = measure_label.empty() ? std::filesystem::path(measure_events).stem().string() : measure_label;
            out["t_count"] = meta.t_count;
            out["t_max"] = meta.t_max;
            out["vertex_count"] = meta.vertex_count;
            out["dropped_rows"] = meta.dropped_rows;
            emit(measure_out, out.dump(2) + "\n");
        } else if (*traj) {
            std::vector<PolarPoint> points;
            if (!traj_trace.empty()) {
                print_config({{"command", "trajectory"}, {"trace", traj_trace}});
                std::istringstream in(io::read_file(traj_trace));
                points = trajectory(io::read_trace_any(in));
            } else if (!traj_events.empty()) {
                print_config({{"command", "trajectory"}, {"events", traj_events}, {"format", traj_fmt.echo()},
                              {"u", traj_u}});
                const auto [log, meta] = parse_events_file(traj_events, traj_fmt.config());
                for_each_snapshot(log, traj_u, Incidence::Both,
                                  [&](long, const SparseSnapshot& q) { points.push_back(polar_point(q)); });
            } else {
                throw UsageError("trajectory needs --trace or --events");
            }
            if (points.empty())
                throw io::FormatError("trace is empty");
            std::ostringstream csv;
            io::write_polar_csv(csv, points);
            emit(traj_out, csv.str());
            if (!traj_svg.empty())
                io::write_file(traj_svg, render_trajectory_svg(points));
        } else if (*radar) {
            print_config({{"command", "radar"}, {"inputs", radar_inputs}});
            std::vector<RadarInput> inputs;
            for (const auto& path : radar_inputs) {
                json j;
                try {
                    j = json::parse(io::read_file(path));
                } catch (const json::exception& e) {
                    throw io::FormatError("'" + path + "': " + e.what());
                }
                inputs.push_back(radar_input(label_of(path, j), io::measure_set_from_json(j)));
            }
            const auto normalized = normalize_radar(inputs);
            std::ostringstream csv;
            csv << "label";
            for (auto axis : radar_axes)
                csv << ',' << axis;
            csv << '\n';
            for (const auto& r : normalized) {
                csv << r.label;
                for (double v : r.values)
                    csv << ',' << io::format_double(v);
                csv << '\n';
            }
            emit(radar_out, csv.str());
            if (!radar_svg.empty())
                io::write_file(radar_svg, render_radar_svg(normalized));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const io::FormatError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const IngestError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

#include "riskfront/cli.hpp"

#include "riskfront/csv.hpp"
#include "riskfront/envelope.hpp"
#include "riskfront/errors.hpp"
#include "riskfront/ga.hpp"
#include "riskfront/kernels.hpp"
#include "riskfront/objectives.hpp"
#include "riskfront/oracle.hpp"
#include "riskfront/pareto.hpp"
#include "riskfront/report.hpp"
#include "riskfront/scenario_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>

namespace riskfront::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct CommonOptions {
    std::string scenario_path;
    std::string builtin;
    std::optional<long long> demand;
    std::string weights;
    bool relax = false;
    std::string out_dir = ".";
};

struct GaOptions {
    std::uint64_t seed = 0;
    std::size_t population = 200;
    std::size_t generations = 100;
    double crossover_ratio = 0.8;
    std::string spawn_schedule;
    std::size_t mutation_base = 100;
    std::string objective = "weighted";
};

std::vector<long long> parse_int_list(const std::string& text, const char* what)
{
    std::vector<long long> out;
    for (const auto& field : csv::split_line(text)) {
        long long v = 0;
        if (!csv::parse(field, v)) {
            throw ConfigError(std::string(what) + ": '" + field + "' is not an integer");
        }
        out.push_back(v);
    }
    return out;
}

Scenario resolve_scenario(const CommonOptions& o)
{
    Scenario scen;
    if (!o.scenario_path.empty()) {
        scen = load_scenario(o.scenario_path);
    } else if (o.builtin.empty() || o.builtin == "fig2") {
        scen = Scenario::fig2();
    } else {
        throw ConfigError("unknown builtin scenario '" + o.builtin + "' (available: fig2)");
    }
    if (o.demand) {
        scen.demand = *o.demand;
    }
    if (!o.weights.empty()) {
        const auto fields = csv::split_line(o.weights);
        double w1 = 0, w2 = 0;
        if (fields.size() != 2 || !csv::parse(fields[0], w1) || !csv::parse(fields[1], w2)) {
            throw ConfigError("--weights expects W1,W2");
        }
        scen.weights = {w1, w2};
    }
    scen.validate();
    return scen;
}

GaConfig make_ga_config(const CommonOptions& c, const GaOptions& g)
{
    GaConfig cfg;
    cfg.seed = g.seed;
    cfg.initial_population = g.population;
    cfg.max_generations = g.generations;
    cfg.crossover_ratio = g.crossover_ratio;
    cfg.relax = c.relax;
    cfg.mutation_base = g.mutation_base;
    if (!g.spawn_schedule.empty()) {
        for (auto v : parse_int_list(g.spawn_schedule, "--spawn-schedule")) {
            if (v < 1) throw ConfigError("--spawn-schedule entries must be positive");
            cfg.spawn_schedule.push_back(static_cast<std::size_t>(v));
        }
    }
    cfg.validate();
    return cfg;
}

json ga_config_json(const GaConfig& cfg)
{
    return {{"initial_population", cfg.initial_population},
            {"spawn_schedule", cfg.spawn_schedule},
            {"crossover_ratio", cfg.crossover_ratio},
            {"max_generations", cfg.max_generations},
            {"seed", cfg.seed},
            {"relax", cfg.relax},
            {"mutation_base", cfg.mutation_base}};
}

std::vector<Units> resolve_demands(const std::string& list, const Scenario& scen)
{
    if (list.empty()) {
        return {scen.demand};
    }
    std::vector<Units> out;
    for (auto v : parse_int_list(list, "--demands")) {
        out.push_back(static_cast<Units>(v));
    }
    return out;
}

/// Collects outputs of one command and writes them plus the run manifest.
class OutputSet {
public:
    OutputSet(const CommonOptions& common, std::string command, const std::vector<std::string>& args)
        : dir_(common.out_dir), command_(std::move(command)), args_(args), start_(Clock::now())
    {
        fs::create_directories(dir_);
        scenario_ref_ = common.scenario_path.empty() ? "builtin:" + (common.builtin.empty() ? "fig2" : common.builtin)
                                                     : common.scenario_path;
    }

    void write(const std::string& name, std::string_view content)
    {
        csv::write_atomic(dir_ / name, content);
        outputs_.push_back((dir_ / name).string());
    }

    void finish(const json& config, std::optional<std::uint64_t> seed)
    {
        const auto elapsed = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        json manifest = {{"command", command_},
                         {"scenario", scenario_ref_},
                         {"config", config},
                         {"seed", seed ? json(*seed) : json(nullptr)},
                         {"tool_version", RISKFRONT_VERSION},
                         {"kernels", kernels::to_string(kernels::active_isa())},
                         {"argv", args_},
                         {"outputs", outputs_},
                         {"wall_clock_ms", elapsed}};
        csv::write_atomic(dir_ / "manifest.json", manifest.dump(2) + "\n");
    }

private:
    fs::path dir_;
    std::string command_;
    std::vector<std::string> args_;
    Clock::time_point start_;
    std::string scenario_ref_;
    std::vector<std::string> outputs_;
};

double elapsed_ms(Clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// ---------------------------------------------------------------- evaluate

struct EvaluateOptions {
    std::string distributions;
};

void cmd_evaluate(const CommonOptions& common, const EvaluateOptions& opts, const std::vector<std::string>& args,
                  std::ostream& out)
{
    const Scenario scen = resolve_scenario(common);
    const std::size_t n = scen.supplier_count();
    const auto table = csv::read(opts.distributions);

    std::vector<std::size_t> xcol(n);
    for (std::size_t i = 0; i < n; ++i) {
        xcol[i] = table.column("x" + std::to_string(i + 1));
    }
    const bool explicit_structural = std::find(table.header.begin(), table.header.end(), "alpha1") != table.header.end();
    std::vector<std::size_t> acol(n), bcol(n);
    if (explicit_structural) {
        for (std::size_t i = 0; i < n; ++i) {
            acol[i] = table.column("alpha" + std::to_string(i + 1));
            bcol[i] = table.column("beta" + std::to_string(i + 1));
        }
    }
    if (table.header.size() > n && !explicit_structural) {
        std::size_t extra = 0;
        for (const auto& h : table.header) extra += h.rfind('x', 0) == 0 ? 1 : 0;
        if (extra != n) {
            throw InputError(table.source + ": header has " + std::to_string(extra) + " share columns, scenario has " +
                             std::to_string(n) + " suppliers");
        }
    }

    std::string csv_out = "row,";
    for (const char* prefix : {"x", "p", "alpha", "beta"}) {
        for (std::size_t i = 1; i <= n; ++i) csv_out += prefix + std::to_string(i) + ",";
    }
    csv_out += "total_cost,risk_index,fitness,feasible\n";

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        const std::string where = table.source + " row " + std::to_string(r + 1) + " (line " +
                                  std::to_string(table.line[r]) + ")";
        std::vector<Units> shares(n);
        for (std::size_t i = 0; i < n; ++i) {
            long long v = 0;
            if (!csv::parse(row[xcol[i]], v)) {
                throw InputError(where + ": share '" + row[xcol[i]] + "' is not an integer");
            }
            shares[i] = v;
        }
        const Distribution dist(std::move(shares));
        try {
            check_distribution(dist, scen);
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }

        const auto probs = marginal_failure_probabilities(dist, scen);
        std::vector<StructuralValues> sv(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (explicit_structural) {
                if (!csv::parse(row[acol[i]], sv[i].alpha) || !csv::parse(row[bcol[i]], sv[i].beta)) {
                    throw InputError(where + ": alpha/beta must be numbers");
                }
            } else {
                sv[i] = structural_values(scen.suppliers[i].profile, probs[i]);
            }
        }
        const ObjectivePoint point{total_cost(dist, scen), risk_index(dist, scen.demand, sv)};

        csv_out += std::to_string(r + 1) + ",";
        for (auto x : dist.shares()) csv_out += std::to_string(x) + ",";
        for (double p : probs) csv_out += csv::format(p) + ",";
        for (const auto& s : sv) csv_out += csv::format(s.alpha) + ",";
        for (const auto& s : sv) csv_out += csv::format(s.beta) + ",";
        csv_out += csv::format(point.total_cost) + "," + csv::format(point.risk_index) + "," +
                   csv::format(fitness(point, scen)) + "," + (is_feasible(dist, scen, false) ? "1" : "0") + "\n";
    }

    OutputSet outputs(common, "evaluate", args);
    outputs.write("evaluation.csv", csv_out);
    outputs.finish({{"scenario", scenario_to_json(scen)}, {"distributions", opts.distributions}}, std::nullopt);
    out << csv_out;
}

// --------------------------------------------------------------- enumerate

struct EnumerateOptions {
    bool front = false;
};

void cmd_enumerate(const CommonOptions& common, const EnumerateOptions& opts, const std::vector<std::string>& args,
                   std::ostream& out)
{
    const Scenario scen = resolve_scenario(common);
    check_enumeration_capacity(scen);

    std::string rows = report::enumeration_header(scen.supplier_count());
    const auto rep = enumerate(scen, common.relax, [&](std::span<const Units> shares, const Evaluation& e) {
        rows += report::enumeration_row(shares, e.point, e.within_ceiling);
    });

    OutputSet outputs(common, "enumerate", args);
    outputs.write("enumeration.csv", rows);

    json report = {{"demand", rep.demand},
                   {"feasible_count", rep.feasible_count},
                   {"relaxed_count", rep.relaxed_count},
                   {"relax", common.relax}};
    if (rep.feasible_count > 0) {
        const auto best = weighted_sum_optimum(scen, common.relax);
        report["weighted_optimum"] = {{"distribution", std::vector<Units>(best.distribution.shares().begin(),
                                                                          best.distribution.shares().end())},
                                      {"total_cost", best.point.total_cost},
                                      {"risk_index", best.point.risk_index},
                                      {"fitness", fitness(best.point, scen)}};
    }
    if (opts.front) {
        const auto front = exact_pareto_front(scen, common.relax);
        std::string text = report::enumeration_header(scen.supplier_count());
        for (const auto& f : front) {
            text += report::enumeration_row(f.distribution.shares(), f.point, is_feasible(f.distribution, scen, false));
        }
        outputs.write("front.csv", text);
        report["front_size"] = front.size();
    }
    outputs.write("enumeration_report.json", report.dump(2) + "\n");
    outputs.finish({{"scenario", scenario_to_json(scen)}, {"relax", common.relax}, {"front", opts.front}},
                   std::nullopt);

    out << "feasible " << rep.feasible_count << " of " << rep.relaxed_count << " compositions\n";
    if (rep.feasible_count == 0) {
        throw InfeasibleError("no feasible distribution for demand " + std::to_string(scen.demand));
    }
}

// ---------------------------------------------------------------------- ga

void cmd_ga(const CommonOptions& common, const GaOptions& gopts, const std::vector<std::string>& args,
            std::ostream& out)
{
    const Scenario scen = resolve_scenario(common);
    const GaConfig cfg = make_ga_config(common, gopts);
    const Objective objective = parse_objective(gopts.objective);

    const auto result = run_ga(scen, cfg, objective);
    const auto& best = result.final_population.front();
    if (!best.feasible) {
        throw InfeasibleError("genetic search found no feasible distribution");
    }

    json best_doc = {{"distribution", std::vector<Units>(best.distribution.shares().begin(),
                                                         best.distribution.shares().end())},
                     {"fitness", best.fitness},
                     {"total_cost", best.point.total_cost},
                     {"risk_index", best.point.risk_index},
                     {"objective", to_string(objective)},
                     {"generations", result.history.size()},
                     {"evaluations", result.evaluations},
                     {"seed", cfg.seed}};

    OutputSet outputs(common, "ga", args);
    outputs.write("best.json", best_doc.dump(2) + "\n");
    outputs.write("ga_stats.csv", report::stats_csv(result.history));
    outputs.finish({{"scenario", scenario_to_json(scen)}, {"ga", ga_config_json(cfg)}, {"objective", to_string(objective)}},
                   cfg.seed);

    out << "best " << best.distribution.to_string() << " fitness " << csv::format(best.fitness) << "\n";
}

// ------------------------------------------------------------------ pareto

struct ParetoCliOptions {
    std::string demands;
    bool indicators = false;
};

void cmd_pareto(const CommonOptions& common, const GaOptions& gopts, const ParetoCliOptions& popts,
                const std::vector<std::string>& args, std::ostream& out)
{
    const Scenario scen = resolve_scenario(common);
    const GaConfig cfg = make_ga_config(common, gopts);
    const auto demands = resolve_demands(popts.demands, scen);

    ParetoOptions opts;
    opts.indicators = popts.indicators;
    const auto result = sweep(scen, demands, cfg, opts);

    std::string triple = report::triple_header();
    std::string front = report::front_header(scen.supplier_count());
    OutputSet outputs(common, "pareto", args);
    for (const auto& e : result.entries) {
        triple += report::triple_row(e.demand, e.run.result);
        front += report::front_rows(e.demand, e.run.result.front);
        if (popts.indicators) {
            outputs.write("indicators_d" + std::to_string(e.demand) + ".csv", report::indicators_csv(e.run.indicators));
        }
    }
    outputs.write("triple.csv", triple);
    outputs.write("front.csv", front);
    outputs.finish({{"scenario", scenario_to_json(scen)},
                    {"ga", ga_config_json(cfg)},
                    {"demands", demands},
                    {"indicators", popts.indicators}},
                   cfg.seed);
    out << triple;
}

// ----------------------------------------------------------------- compare

struct CompareOptions {
    std::string demands;
    std::string methods = "oracle,ga,ga-pareto";
};

void cmd_compare(const CommonOptions& common, const GaOptions& gopts, const CompareOptions& copts,
                 const std::vector<std::string>& args, std::ostream& out)
{
    const Scenario scen = resolve_scenario(common);
    const GaConfig cfg = make_ga_config(common, gopts);
    const auto demands = resolve_demands(copts.demands, scen);
    const auto methods = csv::split_line(copts.methods);
    for (const auto& m : methods) {
        if (m != "oracle" && m != "ga" && m != "ga-pareto") {
            throw ConfigError("unknown method '" + m + "' (expected oracle, ga, ga-pareto)");
        }
    }

    std::string text = report::compare_header();
    for (Units d : demands) {
        const Scenario at = scen.with_demand(d);
        for (const auto& m : methods) {
            const auto start = Clock::now();
            std::uint64_t solutions = 0;
            if (m == "oracle") {
                solutions = count_feasible(at, common.relax).feasible_count;
            } else if (m == "ga") {
                solutions = run_ga(at, cfg, Objective::weighted).evaluations;
            } else {
                solutions = pareto_optimize(at, cfg).evaluations();
            }
            text += report::compare_row(d, m, solutions, elapsed_ms(start));
        }
    }

    OutputSet outputs(common, "compare", args);
    outputs.write("compare.csv", text);
    outputs.finish({{"scenario", scenario_to_json(scen)},
                    {"ga", ga_config_json(cfg)},
                    {"demands", demands},
                    {"methods", methods}},
                   cfg.seed);
    out << text;
}

// ---------------------------------------------------------------- envelope

struct EnvelopeCliOptions {
    std::string demands;
    std::string series;
    std::string forecast;
    std::string time_column = "t";
    std::string demand_column = "demand";
    std::string value_column = "value";
};

void cmd_envelope(const CommonOptions& common, const GaOptions& gopts, const EnvelopeCliOptions& eopts,
                  const std::vector<std::string>& args, std::ostream& out)
{
    const Scenario scen = resolve_scenario(common);
    const GaConfig cfg = make_ga_config(common, gopts);
    const auto demands = resolve_demands(eopts.demands, scen);

    const auto demand_series = load_series(eopts.series, eopts.time_column, eopts.demand_column);
    const auto forecast = load_series(eopts.forecast, eopts.time_column, eopts.value_column);

    const auto sweep_result = sweep(scen, demands, cfg);
    const auto env = build_envelope(demand_series, sweep_result);
    const auto c = containment(forecast, env);

    json report = {{"points", c.points}, {"inside", c.inside}, {"ratio", c.ratio}};

    OutputSet outputs(common, "envelope", args);
    outputs.write("envelope.csv", envelope_csv(env));
    outputs.write("containment.json", report.dump(2) + "\n");
    outputs.finish({{"scenario", scenario_to_json(scen)},
                    {"ga", ga_config_json(cfg)},
                    {"demands", demands},
                    {"series", eopts.series},
                    {"forecast", eopts.forecast}},
                   cfg.seed);
    out << "contained " << c.inside << " of " << c.points << " points (ratio " << csv::format(c.ratio) << ")\n";
}

void add_common(CLI::App* app, CommonOptions& o)
{
    auto* scenario = app->add_option("--scenario", o.scenario_path, "Scenario JSON file");
    app->add_option("--builtin", o.builtin, "Built-in scenario (fig2)")->excludes(scenario);
    app->add_option("--demand", o.demand, "Override the scenario demand");
    app->add_option("--weights", o.weights, "Fitness weights W1,W2");
    app->add_flag("--relax", o.relax, "Ignore the retailer cost ceiling");
    app->add_option("--out", o.out_dir, "Output directory")->capture_default_str();
}

void add_ga(CLI::App* app, GaOptions& g, bool with_objective)
{
    app->add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app->add_option("--population", g.population, "Initial population")->capture_default_str();
    app->add_option("--generations", g.generations, "Maximum generations")->capture_default_str();
    app->add_option("--crossover-ratio", g.crossover_ratio, "Crossover ratio in [0,1]")->capture_default_str();
    app->add_option("--spawn-schedule", g.spawn_schedule, "Children spawned per generation, comma separated");
    app->add_option("--mutation-base", g.mutation_base, "Crossover trials = ratio x base (0: population size)")
        ->capture_default_str();
    if (with_objective) {
        app->add_option("--objective", g.objective, "cost, risk or weighted")->capture_default_str();
    }
}

int classify(const std::exception& e, std::ostream& err)
{
    err << "error: " << e.what() << "\n";
    if (dynamic_cast<const CapacityError*>(&e)) return kCapacityError;
    if (dynamic_cast<const InfeasibleError*>(&e)) return kInfeasible;
    if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const InputError*>(&e) ||
        dynamic_cast<const ExtrapolationError*>(&e)) {
        return kValidationError;
    }
    return kFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"riskfront: risk-averse supplier selection by enumeration and genetic Pareto search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(RISKFRONT_VERSION));

    CommonOptions common;
    GaOptions gopts;

    EvaluateOptions eval_opts;
    auto* evaluate = app.add_subcommand("evaluate", "Evaluate listed distributions (cost, risk, fitness)");
    add_common(evaluate, common);
    evaluate->add_option("--distributions", eval_opts.distributions, "CSV with x1..xn [alpha1..n beta1..n]")
        ->required();

    EnumerateOptions enum_opts;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustively enumerate all distributions");
    enumerate_cmd->alias("oracle");
    add_common(enumerate_cmd, common);
    enumerate_cmd->add_flag("--front", enum_opts.front, "Also write the exact Pareto front");

    auto* ga = app.add_subcommand("ga", "Run the genetic optimizer for one objective");
    add_common(ga, common);
    add_ga(ga, gopts, true);

    ParetoCliOptions pareto_opts;
    auto* pareto = app.add_subcommand("pareto", "Two-objective genetic Pareto optimization over demands");
    add_common(pareto, common);
    add_ga(pareto, gopts, false);
    pareto->add_option("--demands", pareto_opts.demands, "Comma separated demands");
    pareto->add_flag("--indicators", pareto_opts.indicators, "Write per-generation Pareto distance series");

    CompareOptions compare_opts;
    auto* compare = app.add_subcommand("compare", "Solution counts of oracle, ga and ga-pareto per demand");
    add_common(compare, common);
    add_ga(compare, gopts, false);
    compare->add_option("--demands", compare_opts.demands, "Comma separated demands");
    compare->add_option("--methods", compare_opts.methods, "Subset of oracle,ga,ga-pareto")->capture_default_str();

    EnvelopeCliOptions env_opts;
    auto* envelope = app.add_subcommand("envelope", "Cost envelope over a demand trace and forecast containment");
    add_common(envelope, common);
    add_ga(envelope, gopts, false);
    envelope->add_option("--demands", env_opts.demands, "Sweep grid, comma separated")->required();
    envelope->add_option("--series", env_opts.series, "Demand trace CSV")->required();
    envelope->add_option("--forecast", env_opts.forecast, "Forecast/actual value CSV")->required();
    envelope->add_option("--time-column", env_opts.time_column)->capture_default_str();
    envelope->add_option("--demand-column", env_opts.demand_column)->capture_default_str();
    envelope->add_option("--value-column", env_opts.value_column)->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << RISKFRONT_VERSION << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }

    try {
        if (*evaluate) cmd_evaluate(common, eval_opts, args, out);
        else if (*enumerate_cmd) cmd_enumerate(common, enum_opts, args, out);
        else if (*ga) cmd_ga(common, gopts, args, out);
        else if (*pareto) cmd_pareto(common, gopts, pareto_opts, args, out);
        else if (*compare) cmd_compare(common, gopts, compare_opts, args, out);
        else if (*envelope) cmd_envelope(common, gopts, env_opts, args, out);
    } catch (const std::exception& e) {
        return classify(e, err);
    }
    return kOk;
}

} // namespace riskfront::cli

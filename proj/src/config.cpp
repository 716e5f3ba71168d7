#include "ctsim/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctsim/errors.hpp"
#include "ctsim/synthetic.hpp"

namespace ctsim {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) { ok = true; break; }
        if (!ok) throw config_error("unknown config key '" + key + "' in " + where);
    }
}

void parse_disease(const json& j, DiseaseParams& d) {
    reject_unknown(j,
                   {"p", "lambda", "incubation_mu", "incubation_sigma", "asymptomatic_ratio",
                    "daily_symptomatic_test_prob", "result_delay_days"},
                   "disease");
    d.p = j.value("p", d.p);
    d.lambda = j.value("lambda", d.lambda);
    d.incubation_mu = j.value("incubation_mu", d.incubation_mu);
    d.incubation_sigma = j.value("incubation_sigma", d.incubation_sigma);
    d.asymptomatic_ratio = j.value("asymptomatic_ratio", d.asymptomatic_ratio);
    d.daily_symptomatic_test_prob =
        j.value("daily_symptomatic_test_prob", d.daily_symptomatic_test_prob);
    d.result_delay_days = j.value("result_delay_days", d.result_delay_days);
    d.validate();
}

void parse_tracer(const json& j, TraceParams& t) {
    reject_unknown(j,
                   {"p_prime", "cutoff", "window_days", "max_degree", "followup_interval_days",
                    "second_degree_factor", "third_degree_factor"},
                   "tracer");
    t.p_prime = j.value("p_prime", t.p_prime);
    t.cutoff = j.value("cutoff", t.cutoff);
    t.window = j.value("window_days", t.window);
    t.max_degree = j.value("max_degree", t.max_degree);
    t.followup_interval = j.value("followup_interval_days", t.followup_interval);
    t.second_degree_factor = j.value("second_degree_factor", t.second_degree_factor);
    t.third_degree_factor = j.value("third_degree_factor", t.third_degree_factor);
    t.validate();
}

} // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }

    reject_unknown(j,
                   {"scenario", "app_proportion", "asymptomatic_ratio", "horizon_days", "trials",
                    "master_seed", "threads", "data", "disease", "tracer",
                    "infectiousness_profile", "test_false_negative"},
                   "config root");

    RunConfig cfg;
    const int scenario_id = j.value("scenario", 1);
    const double app = j.value("app_proportion", 0.0);
    const double asymp = j.value("asymptomatic_ratio", 0.40);
    cfg.sim.scenario = build_scenario(scenario_id, app, asymp);
    cfg.sim.scenario.horizon_days = j.value("horizon_days", cfg.sim.scenario.horizon_days);
    if (cfg.sim.scenario.horizon_days < 1) throw config_error("horizon must be >= 1 day");

    cfg.ensemble.trials = j.value("trials", cfg.ensemble.trials);
    cfg.ensemble.master_seed = j.value("master_seed", cfg.ensemble.master_seed);
    cfg.ensemble.threads = j.value("threads", cfg.ensemble.threads);
    if (j.contains("data")) cfg.data_path = j.at("data").get<std::string>();

    if (j.contains("disease")) parse_disease(j.at("disease"), cfg.sim.disease);
    if (j.contains("tracer")) parse_tracer(j.at("tracer"), cfg.sim.tracer);

    if (j.contains("infectiousness_profile")) {
        const json& p = j.at("infectiousness_profile");
        reject_unknown(p, {"start_offset", "weights"}, "infectiousness_profile");
        cfg.sim.profile = InfectiousnessProfile(p.value("start_offset", -5),
                                                p.at("weights").get<std::vector<double>>());
    }
    if (j.contains("test_false_negative")) {
        const json& p = j.at("test_false_negative");
        reject_unknown(p, {"start_offset", "values"}, "test_false_negative");
        cfg.sim.sensitivity = TestSensitivity(p.value("start_offset", -5),
                                              p.at("values").get<std::vector<double>>());
    }
    return cfg;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

TemporalContactGraph load_run_graph(const RunConfig& cfg) {
    if (cfg.data_path) {
        std::ifstream in(*cfg.data_path);
        if (!in) throw config_error("cannot open proximity log: " + *cfg.data_path);
        TemporalContactGraph graph = load_contact_graph(in);
        if (graph.base_days.empty())
            throw config_error("proximity log is empty: " + *cfg.data_path);
        return graph;
    }
    return make_synthetic_graph();
}

} // namespace ctsim

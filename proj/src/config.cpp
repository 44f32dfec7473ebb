#include "bohrcolor/config.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

namespace bohrcolor {

AlphaSchedule make_schedule(const ScheduleConfig& cfg, std::uint64_t m_override) {
    std::uint64_t m = m_override != 0 ? m_override : cfg.m;
    if (cfg.kind == "clustered") return AlphaSchedule::clustered(cfg.clustered, m);
    if (cfg.kind == "prime_root") return AlphaSchedule::prime_root(cfg.prime_root, m);
    throw ConfigError("unknown schedule kind: " + cfg.kind);
}

void RunConfig::validate() const {
    require_valid(params);
    require_valid(torus_params);
    AlphaSchedule sched = make_schedule(schedule);
    std::uint64_t max_n =
        std::max({scan.enumerate_n, scan.audit_n, scan.nilbohr_n, scan.stats_n});
    // The scan discipline: every bound stays well under 1/alpha_{m+1}.
    if (static_cast<double>(max_n) * scan.scan_bound_factor * sched.tail_bound() > 1.0)
        throw ConfigError("schedule tail too heavy for the configured scan bounds");
    if (!(static_cast<double>(max_n) * sched.tail_bound() < params.delta2 * scan.guard_fraction))
        throw ConfigError("scan bound violates the tail guard precondition");
    for (const auto& nbhd : neighborhoods) nbhd.validate();
}

void to_json(nlohmann::json& j, const Params& p) {
    j = {{"delta1", p.delta1}, {"delta2", p.delta2}, {"eta", p.eta}, {"tol", p.tol}};
    if (p.m == kUnbounded)
        j["m"] = "unbounded";
    else
        j["m"] = p.m;
}

void from_json(const nlohmann::json& j, Params& p) {
    p.delta1 = j.at("delta1").get<double>();
    p.delta2 = j.at("delta2").get<double>();
    p.eta = j.value("eta", 0.0);
    p.tol = j.value("tol", kSlack);
    p.m = kUnbounded;
    if (j.contains("m") && !j["m"].is_string()) p.m = j["m"].get<std::uint64_t>();
}

namespace {
void schedule_to_json(nlohmann::json& j, const ScheduleConfig& s) {
    j = {{"kind", s.kind}, {"m", s.m}};
    if (s.kind == "clustered") {
        j["gamma_prime"] = s.clustered.gamma_prime;
        j["cluster_size"] = s.clustered.cluster_size;
        j["delta1"] = s.clustered.delta1;
        j["band_center"] = s.clustered.band_center;
        j["spread"] = s.clustered.spread;
        j["jitter"] = s.clustered.jitter;
        j["tail_start"] = s.clustered.tail_start;
        j["tail_ratio"] = s.clustered.tail_ratio;
    } else {
        j["c_start"] = s.prime_root.c_start;
        j["c_step"] = s.prime_root.c_step;
    }
}

void schedule_from_json(const nlohmann::json& j, ScheduleConfig& s) {
    s.kind = j.at("kind").get<std::string>();
    s.m = j.at("m").get<std::uint64_t>();
    if (s.kind == "clustered") {
        auto& c = s.clustered;
        c.gamma_prime = j.value("gamma_prime", c.gamma_prime);
        c.cluster_size = j.value("cluster_size", c.cluster_size);
        c.delta1 = j.value("delta1", c.delta1);
        c.band_center = j.value("band_center", c.band_center);
        c.spread = j.value("spread", c.spread);
        c.jitter = j.value("jitter", c.jitter);
        c.tail_start = j.value("tail_start", c.tail_start);
        c.tail_ratio = j.value("tail_ratio", c.tail_ratio);
    } else if (s.kind == "prime_root") {
        s.prime_root.c_start = j.value("c_start", s.prime_root.c_start);
        s.prime_root.c_step = j.value("c_step", s.prime_root.c_step);
    } else {
        throw ConfigError("unknown schedule kind: " + s.kind);
    }
}
}  // namespace

void to_json(nlohmann::json& j, const RunConfig& c) {
    j = nlohmann::json::object();
    j["params"] = c.params;
    j["torus_params"] = c.torus_params;
    schedule_to_json(j["schedule"], c.schedule);
    j["scan"] = {{"enumerate_n", c.scan.enumerate_n}, {"audit_n", c.scan.audit_n},
                 {"nilbohr_n", c.scan.nilbohr_n},     {"stats_n", c.scan.stats_n},
                 {"guard_fraction", c.scan.guard_fraction},
                 {"scan_bound_factor", c.scan.scan_bound_factor},
                 {"workers", c.scan.workers}};
    j["discrepancy"] = {{"bins", c.discrepancy.bins},
                        {"linear_tol", c.discrepancy.linear_tol},
                        {"restricted_tol", c.discrepancy.restricted_tol},
                        {"linear_poly", c.discrepancy.linear_poly},
                        {"restricted_poly", c.discrepancy.restricted_poly}};
    j["density"] = {{"dims", c.density.dims},
                    {"grid", c.density.grid},
                    {"n", c.density.n},
                    {"min_occupancy", c.density.min_occupancy}};
    j["neighborhoods"] = c.neighborhoods;
    j["seed"] = c.seed;
    j["golden"] = c.golden_path;
}

void from_json(const nlohmann::json& j, RunConfig& c) {
    c.params = j.at("params").get<Params>();
    c.torus_params = j.at("torus_params").get<Params>();
    schedule_from_json(j.at("schedule"), c.schedule);
    const auto& s = j.at("scan");
    c.scan.enumerate_n = s.value("enumerate_n", c.scan.enumerate_n);
    c.scan.audit_n = s.value("audit_n", c.scan.audit_n);
    c.scan.nilbohr_n = s.value("nilbohr_n", c.scan.nilbohr_n);
    c.scan.stats_n = s.value("stats_n", c.scan.stats_n);
    c.scan.guard_fraction = s.value("guard_fraction", c.scan.guard_fraction);
    c.scan.scan_bound_factor = s.value("scan_bound_factor", c.scan.scan_bound_factor);
    c.scan.workers = s.value("workers", c.scan.workers);
    if (j.contains("discrepancy")) {
        const auto& d = j["discrepancy"];
        c.discrepancy.bins = d.value("bins", c.discrepancy.bins);
        c.discrepancy.linear_tol = d.value("linear_tol", c.discrepancy.linear_tol);
        c.discrepancy.restricted_tol = d.value("restricted_tol", c.discrepancy.restricted_tol);
        if (d.contains("linear_poly"))
            c.discrepancy.linear_poly = d["linear_poly"].get<SpecialGenPoly>();
        if (d.contains("restricted_poly"))
            c.discrepancy.restricted_poly = d["restricted_poly"].get<SpecialGenPoly>();
    }
    if (j.contains("density")) {
        const auto& d = j["density"];
        c.density.dims = d.value("dims", c.density.dims);
        c.density.grid = d.value("grid", c.density.grid);
        c.density.n = d.value("n", c.density.n);
        c.density.min_occupancy = d.value("min_occupancy", c.density.min_occupancy);
    }
    c.neighborhoods.clear();
    if (j.contains("neighborhoods"))
        c.neighborhoods = j["neighborhoods"].get<std::vector<NilBohrNbhd>>();
    c.seed = j.value("seed", c.seed);
    c.golden_path = j.value("golden", c.golden_path);
}

RunConfig parse_config(const nlohmann::json& j) { return j.get<RunConfig>(); }

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    return parse_config(j);
}

}  // namespace bohrcolor

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohrcolor/construction.hpp"
#include "bohrcolor/genpoly.hpp"
#include "bohrcolor/projection.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bohrcolor {

struct ScheduleConfig {
    std::string kind = "clustered";  // "clustered" | "prime_root"
    std::uint64_t m = 49;
    ClusteredScheduleConfig clustered;
    PrimeRootScheduleConfig prime_root;
};

// Builds the schedule; `m_override` (0 = none) re-materializes at another
// truncation, used by the 2m/4m re-validation.
AlphaSchedule make_schedule(const ScheduleConfig& cfg, std::uint64_t m_override = 0);

struct RunConfig {
    Params params;        // projection-side construction constants
    Params torus_params;  // desk-scale torus constants for sampling work
    ScheduleConfig schedule;

    struct Scan {
        std::uint64_t enumerate_n = 100000;
        std::uint64_t audit_n = 100000;
        std::uint64_t nilbohr_n = 100000;
        std::uint64_t stats_n = 50000000;
        double guard_fraction = 0.1;
        double scan_bound_factor = 1000.0;  // demanded gap between N and 1/alpha_{m+1}
        unsigned workers = 1;
    } scan;

    struct Discrepancy {
        std::uint64_t bins = 1000;
        double linear_tol = 0.01;      // smoke threshold for the linear poly over 1..N
        double restricted_tol = 0.1;   // smoke threshold restricted to the integer set
        // The equidistribution-smoke pair; bracket polynomials with rational
        // coefficients are legitimately non-uniform and stay out of the gate.
        SpecialGenPoly linear_poly{{{1, 0.41421356237309515}}};
        SpecialGenPoly restricted_poly{{{2, 0.41421356237309515}}};
    } discrepancy;

    struct Density {
        std::uint64_t dims = 1;
        std::uint64_t grid = 100;
        std::uint64_t n = 100000;
        double min_occupancy = 1.0;
    } density;

    std::vector<NilBohrNbhd> neighborhoods;
    std::uint64_t seed = 12345;
    std::string golden_path = "fixtures/golden.json";

    // Params validation plus schedule certification (decay, scan-bound gap).
    void validate() const;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const nlohmann::json& j);

void to_json(nlohmann::json& j, const Params& p);
void from_json(const nlohmann::json& j, Params& p);
void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

}  // namespace bohrcolor

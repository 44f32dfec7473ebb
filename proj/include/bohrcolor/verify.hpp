#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohrcolor/genpoly.hpp"
#include "bohrcolor/projection.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bohrcolor {

// Colors of 1..N as a flat table (index 0 unused), plus fragile-cell count.
struct ColorTable {
    std::vector<std::uint64_t> cells;  // size N + 1
    std::uint64_t fragile = 0;

    std::uint64_t n() const { return cells.size() - 1; }
};

ColorTable compute_colors(std::uint64_t N, const Params& p, const AlphaSchedule& sched,
                          unsigned workers = 1);

struct AuditReport {
    std::uint64_t scan_bound = 0;
    std::uint64_t diff_count = 0;
    std::uint64_t triples_checked = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;  // (x, s); capped
    std::uint64_t violation_count = 0;
    std::uint64_t boundary_flags = 0;
    double millis = 0.0;

    bool proper() const { return violation_count == 0; }
};

// Exhaustive 3-AP check: every x in [1, N-2s], s in S_list, the colors of
// (x, x+s, x+2s) must not all agree.
AuditReport audit_3ap(const ColorTable& colors, const std::vector<std::uint64_t>& s_list);

struct HitReport {
    std::string neighborhood;
    std::optional<std::uint64_t> witness;
    std::uint64_t search_bound = 0;
    std::vector<double> poly_norms;  // at the witness, when present
    bool revalidated = false;
};

// First n in the enumerated integer set that lands in the nil-Bohr
// neighborhood; absence is a result, not an error.
HitReport nilbohr_hit(const NilBohrNbhd& nbhd, std::uint64_t N, const Params& p,
                      const AlphaSchedule& sched, unsigned workers = 1);
HitReport nilbohr_hit(const NilBohrNbhd& nbhd, const IntegerSetReport& members, const Params& p,
                      const AlphaSchedule& sched);

struct DiscrepancyReport {
    std::vector<double> per_poly;  // binned sup-discrepancy of the rz-values
    std::uint64_t sample_size = 0;
    std::uint64_t bins = 0;
    // Coarse joint occupancy over (first joint_dims schedule coords, polys).
    std::uint64_t joint_occupied = 0;
    std::uint64_t joint_total = 0;
};

// Binned sup deviation of the empirical rz-value distribution from uniform
// on [0, 1/2], per polynomial. `sched` enables the joint-cell diagnostics.
DiscrepancyReport discrepancy(const NilBohrNbhd& nbhd, const std::vector<std::uint64_t>& sample,
                              std::uint64_t bins, const AlphaSchedule* sched = nullptr,
                              std::uint64_t joint_dims = 1, std::uint64_t joint_grid = 10);

// Fraction of occupied cells when n = 1..N is projected onto the first
// `dims` schedule coordinates, grid^dims cells.
double density_occupancy(const AlphaSchedule& sched, std::uint64_t N, std::uint64_t dims,
                         std::uint64_t grid);

struct CayleyReport {
    std::uint64_t colors_used = 0;
    std::uint64_t max_class_size = 0;
    bool proper = false;
    AuditReport audit;
};

// Finite-color certificate on a window: color count, class occupancy, and
// 3-AP properness (delegated to audit_3ap).
CayleyReport cayley_audit(const ColorTable& colors, const std::vector<std::uint64_t>& s_list);

void to_json(nlohmann::json& j, const AuditReport& r);
void to_json(nlohmann::json& j, const HitReport& r);
void to_json(nlohmann::json& j, const DiscrepancyReport& r);
void to_json(nlohmann::json& j, const CayleyReport& r);

}  // namespace bohrcolor

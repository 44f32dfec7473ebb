#include "bohrcolor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace bohrcolor {

ColorTable compute_colors(std::uint64_t N, const Params& p, const AlphaSchedule& sched,
                          unsigned workers) {
    ColorTable t;
    t.cells.assign(N + 1, 0);
    workers = std::max(1u, workers);
    std::vector<std::uint64_t> fragile_per(workers, 0);
    auto run = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t n = lo; n <= hi; ++n) {
            ColorResult c = color_integer(n, p, sched);
            t.cells[n] = c.id.cell;
            if (c.fragile) ++fragile_per[w];
        }
    };
    if (workers == 1 || N < 2 * workers) {
        if (N >= 1) run(0, 1, N);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = (N + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = 1 + w * chunk, hi = std::min(N, lo + chunk - 1);
            if (lo > N) break;
            threads.emplace_back(run, w, lo, hi);
        }
        for (auto& th : threads) th.join();
    }
    for (auto f : fragile_per) t.fragile += f;
    return t;
}

AuditReport audit_3ap(const ColorTable& colors, const std::vector<std::uint64_t>& s_list) {
    auto t0 = std::chrono::steady_clock::now();
    AuditReport r;
    r.scan_bound = colors.n();
    r.diff_count = s_list.size();
    r.boundary_flags = colors.fragile;
    const auto& c = colors.cells;
    for (std::uint64_t s : s_list) {
        if (s == 0 || 2 * s >= r.scan_bound) continue;
        for (std::uint64_t x = 1; x + 2 * s <= r.scan_bound; ++x) {
            ++r.triples_checked;
            if (c[x] == c[x + s] && c[x] == c[x + 2 * s]) {
                ++r.violation_count;
                if (r.violations.size() < 100) r.violations.push_back({x, s});
            }
        }
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
}

HitReport nilbohr_hit(const NilBohrNbhd& nbhd, const IntegerSetReport& members, const Params& p,
                      const AlphaSchedule& sched) {
    nbhd.validate();
    nlohmann::json desc = nbhd;
    HitReport r;
    r.neighborhood = desc.dump();
    r.search_bound = members.scan_bound;
    for (const auto& e : members.elements) {
        if (!nilbohr_contains(nbhd, e.n, p.tol)) continue;
        r.witness = e.n;
        for (const auto& P : nbhd.polys) r.poly_norms.push_back(rz_norm(eval(P, e.n)));
        // Independent re-validation of both halves of the claim.
        double guard = static_cast<double>(e.n) * sched.tail_bound();
        r.revalidated = is_member(project(e.n, sched), p, guard).is_member &&
                        nilbohr_contains(nbhd, e.n, p.tol);
        break;
    }
    return r;
}

HitReport nilbohr_hit(const NilBohrNbhd& nbhd, std::uint64_t N, const Params& p,
                      const AlphaSchedule& sched, unsigned workers) {
    return nilbohr_hit(nbhd, enumerate_members(N, p, sched, workers), p, sched);
}

DiscrepancyReport discrepancy(const NilBohrNbhd& nbhd, const std::vector<std::uint64_t>& sample,
                              std::uint64_t bins, const AlphaSchedule* sched,
                              std::uint64_t joint_dims, std::uint64_t joint_grid) {
    if (sample.empty()) throw std::domain_error("discrepancy: empty sample");
    if (bins < 2) throw std::domain_error("discrepancy: bins >= 2 required");
    DiscrepancyReport r;
    r.sample_size = sample.size();
    r.bins = bins;

    for (const auto& P : nbhd.polys) {
        std::vector<std::uint64_t> hist(bins, 0);
        for (std::uint64_t n : sample) {
            double rz = rz_norm(eval(P, n));  // uniform on [0, 1/2] under equidistribution
            auto b = static_cast<std::uint64_t>(rz * 2.0 * static_cast<double>(bins));
            ++hist[std::min(b, bins - 1)];
        }
        double d = 0.0, cum = 0.0;
        for (std::uint64_t b = 0; b < bins; ++b) {
            cum += static_cast<double>(hist[b]) / static_cast<double>(sample.size());
            d = std::max(d, std::abs(cum - static_cast<double>(b + 1) / static_cast<double>(bins)));
        }
        r.per_poly.push_back(d);
    }

    if (sched != nullptr && joint_dims >= 1 && joint_grid >= 2) {
        joint_dims = std::min<std::uint64_t>(joint_dims, sched->m());
        std::unordered_set<std::uint64_t> occupied;
        for (std::uint64_t n : sample) {
            std::uint64_t key = 0;
            for (std::uint64_t d = 1; d <= joint_dims; ++d) {
                double v = frac(sched->alpha(d) * static_cast<double>(n));
                key = key * joint_grid +
                      std::min<std::uint64_t>(static_cast<std::uint64_t>(v * joint_grid),
                                              joint_grid - 1);
            }
            for (const auto& P : nbhd.polys) {
                double v = eval(P, n);
                key = key * joint_grid +
                      std::min<std::uint64_t>(static_cast<std::uint64_t>(v * joint_grid),
                                              joint_grid - 1);
            }
            occupied.insert(key);
        }
        r.joint_occupied = occupied.size();
        r.joint_total = 1;
        for (std::uint64_t d = 0; d < joint_dims + nbhd.polys.size(); ++d)
            r.joint_total *= joint_grid;
    }
    return r;
}

double density_occupancy(const AlphaSchedule& sched, std::uint64_t N, std::uint64_t dims,
                         std::uint64_t grid) {
    dims = std::min<std::uint64_t>(dims, sched.m());
    std::unordered_set<std::uint64_t> occupied;
    for (std::uint64_t n = 1; n <= N; ++n) {
        std::uint64_t key = 0;
        for (std::uint64_t d = 1; d <= dims; ++d) {
            double v = frac(sched.alpha(d) * static_cast<double>(n));
            key = key * grid +
                  std::min<std::uint64_t>(static_cast<std::uint64_t>(v * grid), grid - 1);
        }
        occupied.insert(key);
    }
    double total = std::pow(static_cast<double>(grid), static_cast<double>(dims));
    return static_cast<double>(occupied.size()) / total;
}

CayleyReport cayley_audit(const ColorTable& colors, const std::vector<std::uint64_t>& s_list) {
    CayleyReport r;
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t n = 1; n <= colors.n(); ++n) ++counts[colors.cells[n]];
    r.colors_used = counts.size();
    for (const auto& [cell, c] : counts) r.max_class_size = std::max(r.max_class_size, c);
    r.audit = audit_3ap(colors, s_list);
    r.proper = r.audit.proper();
    return r;
}

void to_json(nlohmann::json& j, const AuditReport& r) {
    auto v = nlohmann::json::array();
    for (const auto& [x, s] : r.violations) v.push_back({{"x", x}, {"s", s}});
    j = {{"scan_bound", r.scan_bound},       {"diff_count", r.diff_count},
         {"triples_checked", r.triples_checked}, {"violation_count", r.violation_count},
         {"violations", v},                  {"boundary_flags", r.boundary_flags},
         {"millis", r.millis}};
}

void to_json(nlohmann::json& j, const HitReport& r) {
    j = {{"neighborhood", r.neighborhood},
         {"search_bound", r.search_bound},
         {"found", r.witness.has_value()},
         {"poly_norms", r.poly_norms},
         {"revalidated", r.revalidated}};
    if (r.witness) j["witness"] = *r.witness;
}

void to_json(nlohmann::json& j, const DiscrepancyReport& r) {
    j = {{"per_poly", r.per_poly},
         {"sample_size", r.sample_size},
         {"bins", r.bins},
         {"joint_occupied", r.joint_occupied},
         {"joint_total", r.joint_total}};
}

void to_json(nlohmann::json& j, const CayleyReport& r) {
    j = {{"colors_used", r.colors_used},
         {"max_class_size", r.max_class_size},
         {"proper", r.proper},
         {"audit", r.audit}};
}

}  // namespace bohrcolor

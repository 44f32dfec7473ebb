#pragma once

#include <cstdint>
#include <vector>

#include "bohrcolor/construction.hpp"
#include "bohrcolor/sparse_point.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bohrcolor {

// A Bohr neighborhood of the truncated l^1 torus: k bounded integer dual
// rows and a width. Row r sends (a_1,...,a_m) to sum_i dual[r][i] * a_i.
struct TorusBohrSet {
    std::vector<std::vector<long long>> dual;  // k rows of length m
    double epsilon = 0.0;

    std::size_t k() const { return dual.size(); }
    std::uint64_t m() const { return dual.empty() ? 0 : dual.front().size(); }
    long long max_entry() const;
    void validate() const;  // k >= 1, epsilon in (0, 1/2), rows equal length
};

// Applies the k dual functionals; result is k canonical circle values.
std::vector<double> dual_apply(const TorusBohrSet& B, const SparsePoint& x);

// Sup of the R/Z norms of the coordinates.
double sup_norm(const std::vector<double>& circle_values);

// max_r ||f_r(x)|| < epsilon - tol.
bool bohr_contains(const TorusBohrSet& B, const SparsePoint& x, double tol = kSlack);

struct Cluster {
    std::uint64_t anchor = 0;
    std::vector<std::uint64_t> indices;  // includes the anchor
    std::uint64_t scanned = 0;
};

// Finds 1 + delta1/delta2 coordinate indices whose dual images of delta2*e_j
// agree within sup-distance delta2*epsilon, by bucketing into a half-open grid.
// Throws NeedLargerM with a pigeonhole-sufficient bound if the matrix runs out.
Cluster find_cluster(const TorusBohrSet& B, const Params& p);

struct WitnessReport {
    SparsePoint witness;
    std::vector<std::uint64_t> cluster;
    std::uint64_t anchor = 0;
    double sup_norm = 0.0;
    double chain_bound = 0.0;  // sum over the cluster of ||f_j - f_i||
    std::uint64_t scanned = 0;
};

// The constructive intersection theorem: builds v in S_m with |f(v)| <=
// delta1 * epsilon < epsilon, certifying S_m meets B.
WitnessReport build_witness(const TorusBohrSet& B, const Params& p);

void to_json(nlohmann::json& j, const TorusBohrSet& B);
void from_json(const nlohmann::json& j, TorusBohrSet& B);
void to_json(nlohmann::json& j, const WitnessReport& w);

}  // namespace bohrcolor

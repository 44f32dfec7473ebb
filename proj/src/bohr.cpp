#include "bohrcolor/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace bohrcolor {

long long TorusBohrSet::max_entry() const {
    long long c = 0;
    for (const auto& row : dual)
        for (long long b : row) c = std::max(c, std::abs(b));
    return c;
}

void TorusBohrSet::validate() const {
    if (dual.empty()) throw ConfigError("bohr set: need k >= 1 dual rows");
    // The rz norm tops out at 1/2, so epsilon = 1/2 means the whole torus.
    if (!(epsilon > 0.0 && epsilon <= 0.5)) throw ConfigError("bohr set: epsilon outside (0, 1/2]");
    for (const auto& row : dual)
        if (row.size() != dual.front().size()) throw ConfigError("bohr set: ragged dual matrix");
}

// Dual rows are finite integer sequences; coordinates past the stored
// columns carry an implicit zero.
static double dual_entry(const TorusBohrSet& B, std::size_t r, std::uint64_t j) {
    return j <= B.m() ? static_cast<double>(B.dual[r][j - 1]) : 0.0;
}

std::vector<double> dual_apply(const TorusBohrSet& B, const SparsePoint& x) {
    std::vector<double> out(B.k());
    for (std::size_t r = 0; r < B.k(); ++r) {
        double acc = 0.0;
        for (const auto& [i, v] : x.entries()) acc += dual_entry(B, r, i) * v;
        out[r] = frac(acc);
    }
    return out;
}

double sup_norm(const std::vector<double>& circle_values) {
    double s = 0.0;
    for (double v : circle_values) s = std::max(s, rz_norm(v));
    return s;
}

bool bohr_contains(const TorusBohrSet& B, const SparsePoint& x, double tol) {
    return sup_norm(dual_apply(B, x)) < B.epsilon - tol;
}

namespace {
// Pigeonhole bound: (target-1) * ceil(1/(delta2*eps))^k + 1, saturating.
std::uint64_t pigeonhole_bound(std::uint64_t target, double cell_side, std::size_t k) {
    double cells = std::ceil(1.0 / cell_side);
    double bound = static_cast<double>(target - 1);
    for (std::size_t r = 0; r < k; ++r) bound *= cells;
    bound += 1.0;
    if (bound > 1.8e19) return kUnbounded;
    return static_cast<std::uint64_t>(bound);
}
}  // namespace

Cluster find_cluster(const TorusBohrSet& B, const Params& p) {
    B.validate();
    const std::uint64_t target = p.ratio() + 1;
    const double cell_side = p.delta2 * B.epsilon;
    const std::size_t k = B.k();

    // Past the stored columns every f_j is 0, so the pigeonhole bound always
    // terminates the scan; p.m is the hard stop.
    const std::uint64_t need = pigeonhole_bound(target, cell_side, k);
    const std::uint64_t limit = std::min(p.m, need);

    // Bucket key: concatenated per-coordinate cell indices of f_j.
    std::unordered_map<std::string, std::vector<std::uint64_t>> buckets;
    std::string key(k * sizeof(std::uint64_t), '\0');
    for (std::uint64_t j = 1; j <= limit; ++j) {
        for (std::size_t r = 0; r < k; ++r) {
            double fr = frac(dual_entry(B, r, j) * p.delta2);
            auto cell = static_cast<std::uint64_t>(fr / cell_side);
            std::memcpy(key.data() + r * sizeof(cell), &cell, sizeof(cell));
        }
        auto& bucket = buckets[key];
        bucket.push_back(j);
        if (bucket.size() == target) return {bucket.front(), bucket, j};
    }
    throw NeedLargerM("find_cluster: ambient truncation exhausted before a cell filled", need);
}

WitnessReport build_witness(const TorusBohrSet& B, const Params& p) {
    Cluster c = find_cluster(B, p);

    std::vector<SparsePoint::Entry> e;
    e.reserve(c.indices.size());
    e.push_back({c.anchor, frac(-p.delta1)});
    for (std::uint64_t j : c.indices)
        if (j != c.anchor) e.push_back({j, p.delta2});
    SparsePoint v = SparsePoint::from_pairs(std::move(e), p.m);

    WitnessReport w;
    w.witness = v;
    w.cluster = c.indices;
    w.anchor = c.anchor;
    w.scanned = c.scanned;
    w.sup_norm = sup_norm(dual_apply(B, v));

    // The proof's chain: |f(v)| <= sum ||f_j - f_i|| <= (delta1/delta2) * delta2 * eps.
    std::vector<double> fi(B.k());
    for (std::size_t r = 0; r < B.k(); ++r)
        fi[r] = frac(dual_entry(B, r, c.anchor) * p.delta2);
    double chain = 0.0;
    for (std::uint64_t j : c.indices) {
        if (j == c.anchor) continue;
        double d = 0.0;
        for (std::size_t r = 0; r < B.k(); ++r) {
            double fj = frac(dual_entry(B, r, j) * p.delta2);
            d = std::max(d, rz_norm_of(fj - fi[r]));
        }
        chain += d;
    }
    w.chain_bound = chain;

    if (!is_member(v, p).is_member)
        throw ConstructionViolation("build_witness: witness failed S_m membership");
    if (!(w.sup_norm <= p.delta1 * B.epsilon + p.tol))
        throw ConstructionViolation("build_witness: |f(v)| exceeded delta1 * epsilon");
    return w;
}

void to_json(nlohmann::json& j, const TorusBohrSet& B) {
    j = {{"epsilon", B.epsilon}, {"dual", B.dual}};
}

void from_json(const nlohmann::json& j, TorusBohrSet& B) {
    B.epsilon = j.at("epsilon").get<double>();
    B.dual = j.at("dual").get<std::vector<std::vector<long long>>>();
    B.validate();
}

void to_json(nlohmann::json& j, const WitnessReport& w) {
    j = {{"witness", w.witness},
         {"cluster_size", w.cluster.size()},
         {"anchor", w.anchor},
         {"sup_norm", w.sup_norm},
         {"chain_bound", w.chain_bound},
         {"scanned", w.scanned}};
}

}  // namespace bohrcolor

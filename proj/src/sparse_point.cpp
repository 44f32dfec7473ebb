#include "bohrcolor/sparse_point.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace bohrcolor {

SparsePoint SparsePoint::from_pairs(std::vector<Entry> pairs, std::uint64_t ambient) {
    SparsePoint p(ambient);
    for (auto& [i, v] : pairs) {
        if (i == 0) throw DimensionError("coordinate indices start at 1");
        if (ambient != kUnbounded && i > ambient)
            throw DimensionError("coordinate index exceeds ambient bound");
        v = frac(v);
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (k + 1 < pairs.size() && pairs[k].first == pairs[k + 1].first)
            throw DimensionError("duplicate coordinate index");
        if (pairs[k].second != 0.0) p.entries_.push_back(pairs[k]);
    }
    return p;
}

double SparsePoint::at(std::uint64_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::uint64_t i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : 0.0;
}

namespace {
std::uint64_t merged_ambient(const SparsePoint& x, const SparsePoint& y) {
    if (x.ambient() == y.ambient()) return x.ambient();
    if (x.ambient() == kUnbounded) return y.ambient();
    if (y.ambient() == kUnbounded) return x.ambient();
    throw DimensionError("incompatible ambient bounds");
}
}  // namespace

SparsePoint add(const SparsePoint& x, const SparsePoint& y) {
    SparsePoint out(merged_ambient(x, y));
    out.entries_.reserve(x.entries_.size() + y.entries_.size());
    auto ix = x.entries_.begin(), iy = y.entries_.begin();
    while (ix != x.entries_.end() || iy != y.entries_.end()) {
        SparsePoint::Entry e;
        if (iy == y.entries_.end() || (ix != x.entries_.end() && ix->first < iy->first)) {
            e = *ix++;
        } else if (ix == x.entries_.end() || iy->first < ix->first) {
            e = *iy++;
        } else {
            e = {ix->first, frac(ix->second + iy->second)};
            ++ix, ++iy;
        }
        if (e.second != 0.0) out.entries_.push_back(e);
    }
    return out;
}

SparsePoint negate(const SparsePoint& x) {
    SparsePoint out(x.ambient());
    out.entries_.reserve(x.entries_.size());
    for (const auto& [i, v] : x.entries_) out.entries_.push_back({i, 1.0 - v});
    return out;
}

double l1_norm(const SparsePoint& x) {
    double s = 0.0;
    for (const auto& [i, v] : x.entries()) s += rz_norm(v);
    return s;
}

double l2_norm_sq(const SparsePoint& x) {
    double s = 0.0;
    for (const auto& [i, v] : x.entries()) {
        double r = rz_norm(v);
        s += r * r;
    }
    return s;
}

double max_coord_norm(const SparsePoint& x) {
    double m = 0.0;
    for (const auto& [i, v] : x.entries()) m = std::max(m, rz_norm(v));
    return m;
}

void to_json(nlohmann::json& j, const SparsePoint& x) {
    j = nlohmann::json::object();
    if (x.ambient() == kUnbounded)
        j["ambient"] = "unbounded";
    else
        j["ambient"] = x.ambient();
    auto& e = j["entries"] = nlohmann::json::array();
    for (const auto& [i, v] : x.entries()) e.push_back({i, v});
}

void from_json(const nlohmann::json& j, SparsePoint& x) {
    std::uint64_t ambient = kUnbounded;
    if (j.contains("ambient") && !j["ambient"].is_string()) ambient = j["ambient"].get<std::uint64_t>();
    std::vector<SparsePoint::Entry> pairs;
    for (const auto& e : j.at("entries"))
        pairs.push_back({e.at(0).get<std::uint64_t>(), e.at(1).get<double>()});
    x = SparsePoint::from_pairs(std::move(pairs), ambient);
}

}  // namespace bohrcolor

#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "bohrcolor/circle.hpp"
#include "bohrcolor/errors.hpp"

#include <nlohmann/json_fwd.hpp>

namespace bohrcolor {

inline constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

// A finitely supported point of the (truncated) l^1 torus. Entries are
// (coordinate index >= 1, canonical circle value in (0,1)), strictly
// increasing by index; exact zeros are elided.
class SparsePoint {
  public:
    using Entry = std::pair<std::uint64_t, double>;

    SparsePoint() = default;
    explicit SparsePoint(std::uint64_t ambient) : ambient_(ambient) {}

    // Canonicalizes: reduces values mod 1, drops zeros, sorts, checks bounds.
    static SparsePoint from_pairs(std::vector<Entry> pairs, std::uint64_t ambient = kUnbounded);

    const std::vector<Entry>& entries() const { return entries_; }
    std::uint64_t ambient() const { return ambient_; }
    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    // Value at index (0 if off-support).
    double at(std::uint64_t index) const;

    bool operator==(const SparsePoint&) const = default;

  private:
    std::vector<Entry> entries_;
    std::uint64_t ambient_ = kUnbounded;

    friend SparsePoint add(const SparsePoint&, const SparsePoint&);
    friend SparsePoint negate(const SparsePoint&);
};

// Coordinatewise sum in R/Z. Ambients must be equal, or one unbounded
// (the result keeps the tighter bound).
SparsePoint add(const SparsePoint& x, const SparsePoint& y);

// Coordinatewise negation (1 - value on the support).
SparsePoint negate(const SparsePoint& x);

inline SparsePoint sub(const SparsePoint& x, const SparsePoint& y) { return add(x, negate(y)); }

double l1_norm(const SparsePoint& x);
double l2_norm_sq(const SparsePoint& x);
double max_coord_norm(const SparsePoint& x);

// JSON: {"ambient": m or "unbounded", "entries": [[i, v], ...]}.
void to_json(nlohmann::json& j, const SparsePoint& x);
void from_json(const nlohmann::json& j, SparsePoint& x);

}  // namespace bohrcolor

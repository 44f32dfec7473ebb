#include "bohrcolor/projection.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace bohrcolor {

std::uint64_t nth_prime(std::uint64_t i) {
    static std::vector<std::uint64_t> primes;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (primes.size() < i) {
        std::uint64_t c = primes.empty() ? 2 : primes.back() + 1;
        for (;; ++c) {
            bool is_p = true;
            for (std::uint64_t q : primes) {
                if (q * q > c) break;
                if (c % q == 0) {
                    is_p = false;
                    break;
                }
            }
            if (is_p) break;
        }
        primes.push_back(c);
    }
    return primes[i - 1];
}

AlphaSchedule::AlphaSchedule(std::vector<double> alphas, double tail_bound,
                             std::string fingerprint)
    : alphas_(std::move(alphas)), tail_bound_(tail_bound), fingerprint_(std::move(fingerprint)) {
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        if (!(alphas_[i] > 0.0 && alphas_[i] < 0.5))
            throw ConfigError("schedule: alpha outside (0, 1/2) at index " + std::to_string(i + 1));
        if (i > 0 && !(alphas_[i] < alphas_[i - 1]))
            throw ConfigError("schedule: alphas not strictly decreasing at index " +
                              std::to_string(i + 1));
    }
}

AlphaSchedule AlphaSchedule::clustered(const ClusteredScheduleConfig& cfg, std::uint64_t m) {
    if (m == 0 || cfg.cluster_size < 2) throw ConfigError("clustered schedule: bad sizes");
    const double nu = cfg.nu();
    const auto s = static_cast<double>(cfg.cluster_size);
    auto alpha_at = [&](std::uint64_t i) -> double {
        if (i == 1) return frac(std::sqrt(static_cast<double>(cfg.gamma_prime)));
        if (i <= cfg.cluster_size + 1) {
            auto j = static_cast<double>(i - 1);  // 1..cluster_size
            double lin = (s + 1.0 - 2.0 * j) / (s - 1.0);
            return nu * (1.0 + cfg.spread * lin + cfg.jitter * frac(std::sqrt(
                                   static_cast<double>(nth_prime(i)))));
        }
        return cfg.tail_start * std::pow(cfg.tail_ratio, static_cast<double>(i - cfg.cluster_size - 2));
    };
    std::vector<double> a(m);
    for (std::uint64_t i = 1; i <= m; ++i) a[i - 1] = alpha_at(i);

    // Tail sum: explicit over any un-materialized cluster part, geometric beyond.
    std::uint64_t geo_from = std::max(m, cfg.cluster_size + 1);
    double tail = 0.0;
    for (std::uint64_t i = m + 1; i <= geo_from; ++i) tail += alpha_at(i);
    tail += alpha_at(geo_from + 1) / (1.0 - cfg.tail_ratio);

    std::ostringstream fp;
    fp << "clustered(g=" << cfg.gamma_prime << ",s=" << cfg.cluster_size << ",d1=" << cfg.delta1
       << ",n*=" << cfg.band_center << ",spread=" << cfg.spread << ",m=" << m << ")";
    return AlphaSchedule(std::move(a), tail, fp.str());
}

AlphaSchedule AlphaSchedule::prime_root(const PrimeRootScheduleConfig& cfg, std::uint64_t m) {
    if (m == 0 || cfg.c_step < 1) throw ConfigError("prime-root schedule: bad config");
    auto alpha_at = [&](std::uint64_t i) {
        double c = static_cast<double>(cfg.c_start) + static_cast<double>(cfg.c_step) * (i - 1.0);
        return frac(std::sqrt(static_cast<double>(nth_prime(i))) * std::pow(10.0, -c));
    };
    std::vector<double> a(m);
    for (std::uint64_t i = 1; i <= m; ++i) a[i - 1] = alpha_at(i);

    // Ratio bound sqrt(p_{i+1}/p_i) * 10^{-step} <= sqrt(2) * 10^{-step}.
    double r = std::numbers::sqrt2 * std::pow(10.0, -cfg.c_step);
    double tail = alpha_at(m + 1) / (1.0 - r);

    std::ostringstream fp;
    fp << "prime_root(c0=" << cfg.c_start << ",step=" << cfg.c_step << ",m=" << m << ")";
    return AlphaSchedule(std::move(a), tail, fp.str());
}

SparsePoint project(std::uint64_t n, const AlphaSchedule& sched) {
    if (n > (1ull << 53))
        throw std::overflow_error("project: n exceeds exact double range");
    std::vector<SparsePoint::Entry> e;
    e.reserve(sched.m());
    const auto nd = static_cast<double>(n);
    for (std::uint64_t i = 1; i <= sched.m(); ++i) {
        double v = frac(sched.alpha(i) * nd);
        if (v != 0.0) e.push_back({i, v});
    }
    return SparsePoint::from_pairs(std::move(e), sched.m());
}

namespace {

// Conservative prefilter: every guarded member has at most one coordinate
// whose clause-2 margin fails (the special one). Two failures reject.
bool may_be_member(std::uint64_t n, const Params& p, const AlphaSchedule& sched, double need) {
    const double w = p.width();
    const auto nd = static_cast<double>(n);
    int bad = 0;
    for (std::uint64_t i = 1; i <= sched.m(); ++i) {
        double v = sched.alpha(i) * nd;
        double f = v - std::floor(v);
        double rz = f <= 0.5 ? f : 1.0 - f;
        if (w - rz <= need && ++bad >= 2) return false;
    }
    return true;
}

void scan_range(std::uint64_t lo, std::uint64_t hi, const Params& p, const AlphaSchedule& sched,
                std::vector<IntegerSetReport::Element>& out) {
    for (std::uint64_t n = lo; n <= hi; ++n) {
        double guard = static_cast<double>(n) * sched.tail_bound();
        if (!may_be_member(n, p, sched, p.tol + guard)) continue;
        MembershipCertificate c = is_member(project(n, sched), p, guard);
        if (c.is_member) out.push_back({n, c.min_margin()});
    }
}

}  // namespace

IntegerSetReport enumerate_members(std::uint64_t N, const Params& p, const AlphaSchedule& sched,
                                   unsigned workers, double guard_fraction) {
    require_valid(p);
    if (p.m != kUnbounded && sched.m() > p.m)
        throw ConfigError("enumerate: schedule truncation exceeds params truncation");
    if (!(static_cast<double>(N) * sched.tail_bound() < p.delta2 * guard_fraction))
        throw ConfigError(
            "enumerate: N * tail_bound >= delta2 * guard_fraction; "
            "reduce N or extend the schedule truncation m");

    IntegerSetReport rep;
    rep.scan_bound = N;
    rep.fingerprint = sched.fingerprint();
    if (N == 0) return rep;

    workers = std::max(1u, workers);
    if (workers == 1) {
        scan_range(1, N, p, sched, rep.elements);
        return rep;
    }
    std::vector<std::vector<IntegerSetReport::Element>> parts(workers);
    std::vector<std::thread> threads;
    std::uint64_t chunk = (N + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::uint64_t lo = 1 + t * chunk;
        std::uint64_t hi = std::min(N, lo + chunk - 1);
        if (lo > N) break;
        threads.emplace_back(
            [&, lo, hi, t] { scan_range(lo, hi, p, sched, parts[t]); });
    }
    for (auto& th : threads) th.join();
    for (auto& part : parts)
        rep.elements.insert(rep.elements.end(), part.begin(), part.end());
    return rep;
}

ColorResult color_integer(std::uint64_t n, const Params& p, const AlphaSchedule& sched) {
    return color_of(project(n, sched), p);
}

std::vector<std::uint64_t> IntegerSetReport::values() const {
    std::vector<std::uint64_t> v;
    v.reserve(elements.size());
    for (const auto& e : elements) v.push_back(e.n);
    return v;
}

void to_json(nlohmann::json& j, const IntegerSetReport& r) {
    auto elems = nlohmann::json::array();
    for (const auto& e : r.elements) elems.push_back({{"n", e.n}, {"margin", e.margin}});
    j = {{"scan_bound", r.scan_bound},
         {"fingerprint", r.fingerprint},
         {"count", r.elements.size()},
         {"elements", elems}};
}

std::string to_csv(const IntegerSetReport& r) {
    std::ostringstream os;
    os << "n,margin\n";
    os.precision(17);
    for (const auto& e : r.elements) os << e.n << "," << e.margin << "\n";
    return os.str();
}

}  // namespace bohrcolor

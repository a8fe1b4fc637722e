#include "heatfk/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "heatfk/error.hpp"

namespace heatfk {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double log_ratio_margin(double lhs, double rhs) {
    if (std::isnan(lhs) || std::isnan(rhs)) return std::numeric_limits<double>::quiet_NaN();
    if (lhs <= 0.0) {
        if (rhs >= 0.0) return kInf;
        // Both negative: lhs ≤ rhs < 0 holds iff lhs/rhs ≥ 1.
        return lhs < 0.0 ? std::log(lhs / rhs) : -kInf;
    }
    if (rhs <= 0.0) return -kInf;
    return std::log(rhs) - std::log(lhs);
}

void PropertyReport::audit(std::string clause, bool passed, std::string detail) {
    hypothesis_audit.push_back({std::move(clause), passed, std::move(detail)});
}

void PropertyReport::require_audit() const {
    std::vector<std::string> failed;
    for (const auto& c : hypothesis_audit)
        if (!c.passed) failed.push_back(c.detail.empty() ? c.clause : c.clause + ": " + c.detail);
    if (!failed.empty()) throw HypothesisError(std::move(failed));
}

GridPoint& PropertyReport::add_point(std::vector<std::pair<std::string, double>> coords, double lhs, double rhs,
                                     bool certified) {
    grid.push_back({std::move(coords), lhs, rhs, log_ratio_margin(lhs, rhs), certified, false});
    return grid.back();
}

GridPoint& PropertyReport::add_point_log(std::vector<std::pair<std::string, double>> coords, double log_lhs,
                                         double log_rhs, bool certified) {
    double lm;
    if (log_lhs == -kInf)
        lm = kInf;
    else if (log_rhs == -kInf)
        lm = -kInf;
    else
        lm = log_rhs - log_lhs;
    grid.push_back({std::move(coords), log_lhs, log_rhs, lm, certified, true});
    return grid.back();
}

std::size_t PropertyReport::witness() const {
    std::size_t best = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = grid[i].log_margin;
        if (best == grid.size() || v < grid[best].log_margin || (std::isnan(v) && !std::isnan(grid[best].log_margin)))
            best = i;
    }
    return best;
}

double PropertyReport::min_log_margin() const {
    const std::size_t w = witness();
    return w == grid.size() ? kInf : grid[w].log_margin;
}

double PropertyReport::min_margin() const { return std::exp(min_log_margin()); }

bool PropertyReport::certified() const {
    for (const auto& p : grid)
        if (!p.certified) return false;
    for (const auto& c : hypothesis_audit)
        if (!c.passed) return false;
    return true;
}

bool PropertyReport::verdict() const {
    if (vacuous) return true;
    const double lm = min_log_margin();
    return !std::isnan(lm) && lm >= std::log1p(-tol);
}

std::optional<double> PropertyReport::log_empirical_constant() const {
    if (!log_constant || grid.empty()) return std::nullopt;
    return *log_constant - min_log_margin();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace heatfk

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace heatfk {

using ParamValue = std::variant<double, std::string>;

struct Param {
    std::string key;
    ParamValue value;
};

struct GridPoint {
    std::vector<std::pair<std::string, double>> coords;
    double lhs = 0.0;
    double rhs = 0.0;
    // ln(RHS/LHS); ±inf where one side vanishes.
    double log_margin = 0.0;
    bool certified = true;
    // lhs and rhs hold natural logarithms.
    bool log_sides = false;
};

struct AuditClause {
    std::string clause;
    bool passed = true;
    std::string detail;
};

// Margins of one check over its grid. A point holds when RHS/LHS ≥ 1 − tol.
struct PropertyReport {
    std::string check;
    std::vector<Param> params;
    std::vector<GridPoint> grid;
    std::vector<AuditClause> hypothesis_audit;
    double tol = 1e-9;
    bool vacuous = false;
    // Logarithm of the explicit constant multiplying the RHS, when there is one.
    std::optional<double> log_constant;

    void add_param(std::string key, double v) { params.push_back({std::move(key), v}); }
    void add_param(std::string key, std::string v) { params.push_back({std::move(key), std::move(v)}); }
    void audit(std::string clause, bool passed, std::string detail = {});
    // Throws HypothesisError listing every failed clause.
    void require_audit() const;

    // Point from values; LHS ≤ RHS is the predicate.
    GridPoint& add_point(std::vector<std::pair<std::string, double>> coords, double lhs, double rhs,
                         bool certified = true);
    // Point from logarithms of positive sides.
    GridPoint& add_point_log(std::vector<std::pair<std::string, double>> coords, double log_lhs, double log_rhs,
                             bool certified = true);

    double min_log_margin() const;
    double min_margin() const;
    // Index of the point with the smallest margin (first on ties); grid.size() when empty.
    std::size_t witness() const;
    bool certified() const;
    bool verdict() const;
    // ln C* = ln C − min ln margin: the smallest constant that would still pass.
    std::optional<double> log_empirical_constant() const;
};

double log_ratio_margin(double lhs, double rhs);

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

} // namespace heatfk

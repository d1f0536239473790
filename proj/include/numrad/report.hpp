#pragma once

#include <map>
#include <string>
#include <vector>

namespace numrad {

// One certified inequality.  For an upper bound the value must dominate the
// reference; for a lower bound it must sit below.  slack is the signed margin
// of the inequality, so satisfied <=> slack >= -1e-8 in both orientations.
struct BoundResult {
    std::string name;
    double value = 0.0;      // the bound
    double reference = 0.0;  // the quantity being bounded
    bool lower = false;
    double slack = 0.0;
    bool satisfied = false;
    std::map<std::string, double> params;
};

constexpr double kSlackTol = 1e-8;

BoundResult upper_bound(std::string name, double value, double reference,
                        std::map<std::string, double> params = {});
BoundResult lower_bound(std::string name, double value, double reference,
                        std::map<std::string, double> params = {});

struct BoundReport {
    std::vector<BoundResult> entries;

    const BoundResult& at(const std::string& name) const;
    bool all_satisfied() const;
};

// Pointwise inequality lhs <= rhs_refined <= rhs_classical.  degenerate marks
// inputs where the correction term is undefined and was dropped (refined then
// equals classical).
struct PointwiseCheck {
    double lhs = 0.0;
    double rhs_refined = 0.0;
    double rhs_classical = 0.0;
    bool degenerate = false;
};

} // namespace numrad

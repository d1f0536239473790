#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "numrad/ensembles.hpp"

namespace numrad {

// One fuzz campaign.  Identical configs produce byte-identical reports, in
// both the parallel and the serial driver: trial k draws everything it needs
// from its own generator Rng(seed ^ k), and aggregation walks trials in index
// order regardless of completion order.
struct FuzzConfig {
    std::uint64_t seed = 0;
    int trials = 100;
    std::size_t dim = 4;
    Ensemble ensemble = Ensemble::ginibre;
    std::vector<double> t_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> alpha_grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> p_grid = {0.5, 1.0, 2.0, 3.0,
                                  std::numeric_limits<double>::infinity()};
};

// Aggregate over all slack values recorded under one inequality name.
// A slack below -1e-8 counts as a violation.  worst_slack is the smallest
// slack seen, tightest_slack the smallest |slack| (how close the inequality
// came to equality); both start at +infinity for names that never fired.
struct InequalityStats {
    std::string name;
    long trials = 0;
    long violations = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    double tightest_slack = std::numeric_limits<double>::infinity();
};

struct VerificationReport {
    FuzzConfig config;
    std::vector<InequalityStats> stats; // fixed registry order
    bool pass() const;
    const InequalityStats* find(const std::string& name) const;
};

// The fixed list of inequality names a campaign can record, in report order.
const std::vector<std::string>& inequality_registry();

// Violation threshold shared by the drivers and the report formatters.
inline constexpr double kViolationTol = -1e-8;

VerificationReport fuzz_verify(const FuzzConfig& config);
// Reference driver without the parallel pragma; byte-identical reports.
VerificationReport fuzz_verify_serial(const FuzzConfig& config);

std::string format_report_table(const VerificationReport& report);
std::string format_report_json(const VerificationReport& report);

} // namespace numrad

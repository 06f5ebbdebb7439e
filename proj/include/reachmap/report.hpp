#pragma once

#include <string>
#include <vector>

#include "reachmap/analysis.hpp"
#include "reachmap/session.hpp"

namespace reachmap {

// One comparison row (healthy baseline vs one condition) for the CSV /
// Markdown emitters.
struct ComparisonRow {
    std::string user_id;
    std::string condition;
    MapComparison comparison;
};

// CSV: header `user,condition,volume_reduction_pct,dexterity_reduction_pct,
// common_voxels`, two-decimal percentages.
std::string comparison_csv(const std::vector<ComparisonRow>& rows);
std::string comparison_markdown(const std::vector<ComparisonRow>& rows);

// Speed tables: one row per user, column groups condition x difficulty,
// cells "mean (sd) [n]" in Markdown and mean/sd/count columns in CSV.
std::string speed_report_csv(const SpeedReport& report);
std::string speed_report_markdown(const SpeedReport& report);

// Two-decimal fixed formatting used by every table ("27.80", "0.66").
std::string format_fixed2(double v);

}  // namespace reachmap

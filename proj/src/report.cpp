#include "reachmap/report.hpp"

#include <cstdio>

namespace reachmap {

namespace {

const char* kConditionNames[3] = {"unrestricted", "partially_restricted", "restricted"};
const char* kTierNames[3] = {"easy", "medium", "hard"};

std::string cell_text(const SpeedCell& cell) {
    if (cell.count == 0) return "-";
    return format_fixed2(cell.mean) + " (" + format_fixed2(cell.sd) + ") [" +
           std::to_string(cell.count) + "]";
}

}  // namespace

std::string format_fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string comparison_csv(const std::vector<ComparisonRow>& rows) {
    std::string out =
        "user,condition,volume_reduction_pct,dexterity_reduction_pct,common_voxels\n";
    for (const ComparisonRow& r : rows) {
        out += r.user_id + ',' + r.condition + ',' +
               format_fixed2(r.comparison.volume_reduction_pct) + ',' +
               format_fixed2(r.comparison.dexterity_reduction_pct) + ',' +
               std::to_string(r.comparison.common_voxel_count) + '\n';
    }
    return out;
}

std::string comparison_markdown(const std::vector<ComparisonRow>& rows) {
    std::string out =
        "| user | condition | volume reduction [%] | dexterity reduction [%] | common "
        "voxels |\n|---|---|---:|---:|---:|\n";
    for (const ComparisonRow& r : rows) {
        out += "| " + r.user_id + " | " + r.condition + " | " +
               format_fixed2(r.comparison.volume_reduction_pct) + " | " +
               format_fixed2(r.comparison.dexterity_reduction_pct) + " | " +
               std::to_string(r.comparison.common_voxel_count) + " |\n";
    }
    return out;
}

std::string speed_report_csv(const SpeedReport& report) {
    std::string out = "user,condition,difficulty,mean_speed,sd_speed,count\n";
    for (const UserSpeedTable& user : report.users) {
        for (int c = 0; c < 3; ++c) {
            for (int d = 0; d < 3; ++d) {
                const SpeedCell& cell = user.cells[c][d];
                if (cell.count == 0) continue;
                out += user.user_id + ',' + kConditionNames[c] + ',' + kTierNames[d] +
                       ',' + format_fixed2(cell.mean) + ',' + format_fixed2(cell.sd) +
                       ',' + std::to_string(cell.count) + '\n';
            }
        }
    }
    return out;
}

std::string speed_report_markdown(const SpeedReport& report) {
    std::string out = "| user |";
    for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
            out += std::string(" ") + kConditionNames[c] + " / " + kTierNames[d] + " |";
    out += "\n|---|";
    for (int i = 0; i < 9; ++i) out += "---|";
    out += '\n';
    for (const UserSpeedTable& user : report.users) {
        out += "| " + user.user_id + " |";
        for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) out += ' ' + cell_text(user.cells[c][d]) + " |";
        out += '\n';
    }
    if (!report.invalid_events.empty()) {
        out += "\nRejected events:\n";
        for (const std::string& msg : report.invalid_events) out += "- " + msg + '\n';
    }
    return out;
}

}  // namespace reachmap

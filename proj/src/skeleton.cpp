#include "reachmap/skeleton.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace reachmap {

using nlohmann::json;

const char* exercise_name(Exercise e) {
    switch (e) {
        case Exercise::kNeutral: return "neutral";
        case Exercise::kShoulderAbductionAdduction: return "shoulder_abduction_adduction";
        case Exercise::kShoulderFlexionExtension: return "shoulder_flexion_extension";
        case Exercise::kShoulderRotation: return "shoulder_rotation";
        case Exercise::kElbowFlexionExtension: return "elbow_flexion_extension";
    }
    return "?";
}

Exercise exercise_from_name(const std::string& name) {
    for (Exercise e : {Exercise::kNeutral, Exercise::kShoulderAbductionAdduction,
                       Exercise::kShoulderFlexionExtension, Exercise::kShoulderRotation,
                       Exercise::kElbowFlexionExtension}) {
        if (name == exercise_name(e)) return e;
    }
    throw IngestionError("unknown exercise id '" + name + "'");
}

const Eigen::Vector3d& SkeletonFrame::at(const std::string& joint, int frame_index) const {
    const auto it = joints.find(joint);
    if (it == joints.end())
        throw IngestionError("frame " + std::to_string(frame_index) + " is missing joint '" +
                             joint + "'");
    if (!it->second.allFinite())
        throw IngestionError("frame " + std::to_string(frame_index) + " has non-finite joint '" +
                             joint + "'");
    return it->second;
}

void SkeletonRecording::validate() const {
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (!std::isfinite(frames[i].timestamp))
            throw IngestionError("frame " + std::to_string(i) + " has a non-finite timestamp");
        if (i > 0 && frames[i].timestamp <= frames[i - 1].timestamp)
            throw IngestionError("timestamps must strictly increase (frame " + std::to_string(i) +
                                 ")");
        for (const auto& [name, pos] : frames[i].joints) {
            if (!pos.allFinite())
                throw IngestionError("frame " + std::to_string(i) + " has non-finite joint '" +
                                     name + "'");
        }
    }
    std::vector<SegmentLabel> sorted = segments;
    std::sort(sorted.begin(), sorted.end(),
              [](const SegmentLabel& a, const SegmentLabel& b) { return a.from < b.from; });
    const int n = static_cast<int>(frames.size());
    int prev_end = 0;
    for (const SegmentLabel& s : sorted) {
        if (s.from < 0 || s.to > n || s.from >= s.to)
            throw IngestionError(std::string("segment '") + exercise_name(s.exercise) +
                                 "' has an out-of-bounds frame range");
        if (s.from < prev_end)
            throw IngestionError(std::string("segment '") + exercise_name(s.exercise) +
                                 "' overlaps another segment");
        prev_end = s.to;
    }
}

bool SkeletonRecording::has_segment(Exercise e) const {
    for (const SegmentLabel& s : segments)
        if (s.exercise == e) return true;
    return false;
}

const SegmentLabel& SkeletonRecording::segment(Exercise e) const {
    for (const SegmentLabel& s : segments)
        if (s.exercise == e) return s;
    throw MissingSegmentError(std::string("recording has no '") + exercise_name(e) + "' segment");
}

namespace {

Eigen::Vector3d parse_vec3(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3)
        throw IngestionError(what + " must be a 3-element array");
    for (const auto& v : j)
        if (!v.is_number()) throw IngestionError(what + " must contain numbers");
    return Eigen::Vector3d(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

}  // namespace

SkeletonRecording parse_recording(std::istream& in, const std::string& origin) {
    SkeletonRecording rec;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw IngestionError(origin + ":" + std::to_string(line_no) + ": invalid JSON (" +
                                 e.what() + ")");
        }
        if (!header_seen) {
            if (!j.is_object() || !j.contains("segments"))
                throw IngestionError(origin + ": first line must be the segments header");
            for (const auto& s : j["segments"]) {
                SegmentLabel label;
                label.exercise = exercise_from_name(s.at("exercise").get<std::string>());
                label.from = s.at("from").get<int>();
                label.to = s.at("to").get<int>();
                rec.segments.push_back(label);
            }
            header_seen = true;
            continue;
        }
        if (!j.is_object() || !j.contains("t") || !j.contains("joints"))
            throw IngestionError(origin + ":" + std::to_string(line_no) +
                                 ": frame needs 't' and 'joints'");
        SkeletonFrame frame;
        frame.timestamp = j["t"].get<double>();
        for (const auto& [name, pos] : j["joints"].items())
            frame.joints[name] = parse_vec3(pos, "joint '" + name + "'");
        rec.frames.push_back(std::move(frame));
    }
    if (!header_seen) throw IngestionError(origin + ": empty recording");
    rec.validate();
    return rec;
}

SkeletonRecording load_recording(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open recording '" + path + "'");
    return parse_recording(in, path);
}

}  // namespace reachmap

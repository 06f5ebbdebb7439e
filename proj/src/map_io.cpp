#include "reachmap/map_io.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>
#include <nlohmann/json.hpp>

#include "reachmap/config.hpp"

namespace reachmap {

using nlohmann::json;

namespace {

constexpr const char* kMagic = "RMAP";
constexpr const char* kJsonMagic = "RMAP-JSON";
constexpr int kVersion = 1;
constexpr std::size_t kRecordBytes = 6;  // u32 voxel + u16 numerator
constexpr std::size_t kCrcBytes = 4;

void put_u16_le(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32_le(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint16_t get_u16_le(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32_le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint32_t crc_of(const std::string& bytes) {
    return static_cast<std::uint32_t>(
        ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()),
                static_cast<uInt>(bytes.size())));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("failed while reading '" + path + "'");
    return bytes;
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace

void save_map(const CapabilityMap& map, const std::string& path) {
    json header;
    header["magic"] = kMagic;
    header["version"] = kVersion;
    header["grid"] = map.grid;
    header["meta"] = map.meta;
    header["count"] = map.entries.size();

    std::string bytes = header.dump();
    bytes += '\n';
    bytes.reserve(bytes.size() + map.entries.size() * kRecordBytes + kCrcBytes);
    for (const MapEntry& e : map.entries) {
        put_u32_le(bytes, e.voxel);
        put_u16_le(bytes, e.numerator);
    }
    put_u32_le(bytes, crc_of(bytes));
    write_file(path, bytes);
}

CapabilityMap load_map(const std::string& path) {
    const std::string bytes = read_file(path);
    const std::size_t newline = bytes.find('\n');
    if (newline == std::string::npos)
        throw CorruptFileError("'" + path + "' has no header line");

    json header;
    try {
        header = json::parse(bytes.substr(0, newline));
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' has a malformed header: " + e.what());
    }
    if (!header.is_object() || header.value("magic", "") != kMagic)
        throw CorruptFileError("'" + path + "' is not a capability map file");
    const int version = header.value("version", -1);
    if (version != kVersion)
        throw VersionMismatchError("'" + path + "' has format version " +
                                   std::to_string(version) + ", expected " +
                                   std::to_string(kVersion));

    CapabilityMap map;
    std::size_t count = 0;
    try {
        header.at("grid").get_to(map.grid);
        header.at("meta").get_to(map.meta);
        header.at("count").get_to(count);
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' header is incomplete: " + e.what());
    }

    const std::size_t body_start = newline + 1;
    const std::size_t expected = body_start + count * kRecordBytes + kCrcBytes;
    if (bytes.size() != expected)
        throw CorruptFileError("'" + path + "' is truncated or padded: " +
                               std::to_string(bytes.size()) + " bytes, expected " +
                               std::to_string(expected));

    const std::string payload = bytes.substr(0, bytes.size() - kCrcBytes);
    const auto* trailer =
        reinterpret_cast<const unsigned char*>(bytes.data() + bytes.size() - kCrcBytes);
    if (crc_of(payload) != get_u32_le(trailer))
        throw ChecksumError("'" + path + "' failed its checksum");

    map.entries.reserve(count);
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + body_start);
    for (std::size_t i = 0; i < count; ++i, p += kRecordBytes)
        map.entries.push_back({get_u32_le(p), get_u16_le(p + 4)});

    try {
        map.finalize();
    } catch (const Error& e) {
        throw CorruptFileError("'" + path + "' holds an invalid map: " + e.what());
    }
    return map;
}

void export_map_json(const CapabilityMap& map, const std::string& path) {
    json j;
    j["magic"] = kJsonMagic;
    j["version"] = kVersion;
    j["grid"] = map.grid;
    j["meta"] = map.meta;
    json entries = json::array();
    for (const MapEntry& e : map.entries) entries.push_back({e.voxel, e.numerator});
    j["entries"] = std::move(entries);
    write_file(path, j.dump(2) + "\n");
}

CapabilityMap import_map_json(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object() || j.value("magic", "") != kJsonMagic)
        throw CorruptFileError("'" + path + "' is not a JSON map export");
    if (j.value("version", -1) != kVersion)
        throw VersionMismatchError("'" + path + "' has format version " +
                                   std::to_string(j.value("version", -1)) + ", expected " +
                                   std::to_string(kVersion));
    CapabilityMap map;
    try {
        j.at("grid").get_to(map.grid);
        j.at("meta").get_to(map.meta);
        for (const auto& e : j.at("entries"))
            map.entries.push_back(
                {e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint16_t>()});
        map.finalize();
    } catch (const json::exception& e) {
        throw CorruptFileError("'" + path + "' is incomplete: " + e.what());
    }
    return map;
}

}  // namespace reachmap

#pragma once

#include <string>

#include "reachmap/capability_map.hpp"

namespace reachmap {

// Binary map container, version 1:
//   line 1: JSON header {"magic":"RMAP","version":1,"grid":...,"meta":...,
//            "count":N} terminated by '\n'
//   then N records of 6 bytes: voxel index (u32 LE), score numerator
//            (u16 LE), sorted by index
//   then CRC-32 (u16/u32 LE, zlib polynomial) of all preceding bytes.
// The worker count used at generation time is not part of the header, so
// outputs are byte-identical across thread counts.
void save_map(const CapabilityMap& map, const std::string& path);

// Throws CorruptFileError (bad magic, truncation, malformed header),
// VersionMismatchError, or ChecksumError; the three are distinct classes.
CapabilityMap load_map(const std::string& path);

// Pure-JSON variant for interop and debugging; numerically lossless
// (numerators stay integers, doubles round-trip exactly).
void export_map_json(const CapabilityMap& map, const std::string& path);
CapabilityMap import_map_json(const std::string& path);

}  // namespace reachmap

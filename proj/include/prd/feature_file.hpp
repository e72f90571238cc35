#pragma once

// Binary container for embedding vectors.
//
// All integers little-endian. Layout:
//
//   offset  size  field
//   0       4     magic    ASCII "PRDF"
//   4       4     version  u32, = 1
//   8       8     N        u64, number of rows, >= 1
//   16      4     D        u32, row width, >= 1
//   20      4     dtype    u32, = 1 (float32)
//   24      4     flags    u32, bit 0 set when a label block follows
//   28      N*D*4 payload  float32 row-major
//   ...     N*4   labels   int32, present iff flags bit 0
//
// Nothing may follow the last block.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "prd/feature_set.hpp"

namespace prd {

inline constexpr char kFeatureFileMagic[4] = {'P', 'R', 'D', 'F'};
inline constexpr std::uint32_t kFeatureFileVersion = 1;
inline constexpr std::uint32_t kDtypeFloat32 = 1;
inline constexpr std::uint32_t kFlagLabels = 1u;
inline constexpr std::size_t kFeatureFileHeaderSize = 28;

/// Serializes to the binary layout. Values are narrowed to float32.
std::vector<std::uint8_t> encode_feature_file(const FeatureSet& features);

/// Parses the binary layout. Throws FormatError naming the offending field
/// (magic, version, N, D, dtype, flags, payload, labels, trailer).
FeatureSet decode_feature_file(std::span<const std::uint8_t> bytes);

void write_feature_file(const std::filesystem::path& path, const FeatureSet& features);
FeatureSet read_feature_file(const std::filesystem::path& path);

/// Whole file contents; throws FormatError("file", ...) when unreadable.
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

}  // namespace prd

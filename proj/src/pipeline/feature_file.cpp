#include "prd/feature_file.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

#include "prd/errors.hpp"

namespace prd {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t at) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(in[at + i]) << (8 * i);
    }
    return v;
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(in[at + i]) << (8 * i);
    }
    return v;
}

}  // namespace

std::vector<std::uint8_t> encode_feature_file(const FeatureSet& features) {
    if (features.cols() > std::numeric_limits<std::uint32_t>::max()) {
        throw DomainError("feature dimension does not fit the header");
    }
    std::vector<std::uint8_t> out;
    out.reserve(kFeatureFileHeaderSize + features.values().size() * 4 + features.rows() * 4);
    out.insert(out.end(), std::begin(kFeatureFileMagic), std::end(kFeatureFileMagic));
    put_u32(out, kFeatureFileVersion);
    put_u64(out, features.rows());
    put_u32(out, static_cast<std::uint32_t>(features.cols()));
    put_u32(out, kDtypeFloat32);
    put_u32(out, features.has_labels() ? kFlagLabels : 0u);
    for (double v : features.values()) {
        put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    }
    if (features.has_labels()) {
        for (std::int32_t label : *features.labels()) {
            put_u32(out, static_cast<std::uint32_t>(label));
        }
    }
    return out;
}

FeatureSet decode_feature_file(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kFeatureFileHeaderSize) {
        throw FormatError("header", "file is shorter than the 28-byte header");
    }
    if (std::memcmp(bytes.data(), kFeatureFileMagic, 4) != 0) {
        throw FormatError("magic", "bad magic, expected \"PRDF\"");
    }
    const std::uint32_t version = get_u32(bytes, 4);
    if (version != kFeatureFileVersion) {
        throw FormatError("version", "unsupported version " + std::to_string(version));
    }
    const std::uint64_t rows = get_u64(bytes, 8);
    const std::uint32_t cols = get_u32(bytes, 16);
    const std::uint32_t dtype = get_u32(bytes, 20);
    const std::uint32_t flags = get_u32(bytes, 24);
    if (rows == 0) {
        throw FormatError("N", "row count N must be at least 1");
    }
    if (cols == 0) {
        throw FormatError("D", "dimension D must be at least 1");
    }
    if (dtype != kDtypeFloat32) {
        throw FormatError("dtype", "unsupported dtype tag " + std::to_string(dtype));
    }
    if ((flags & ~kFlagLabels) != 0) {
        throw FormatError("flags", "unknown flag bits set");
    }

    const std::size_t available = bytes.size() - kFeatureFileHeaderSize;
    if (rows > available / 4 / cols) {
        throw FormatError("payload", "payload truncated: header declares N=" +
                                         std::to_string(rows) + " D=" + std::to_string(cols));
    }
    const std::size_t count = static_cast<std::size_t>(rows) * cols;
    const std::size_t payload_end = kFeatureFileHeaderSize + count * 4;
    const bool labeled = (flags & kFlagLabels) != 0;
    const std::size_t label_bytes = labeled ? static_cast<std::size_t>(rows) * 4 : 0;
    if (bytes.size() < payload_end + label_bytes) {
        throw FormatError("labels", "label block truncated");
    }
    if (bytes.size() > payload_end + label_bytes) {
        throw FormatError("trailer", "unexpected bytes after the last block");
    }

    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        const float v = std::bit_cast<float>(get_u32(bytes, kFeatureFileHeaderSize + 4 * i));
        if (!std::isfinite(v)) {
            throw FormatError("payload", "non-finite value at index " + std::to_string(i));
        }
        values[i] = v;
    }
    std::optional<std::vector<std::int32_t>> labels;
    if (labeled) {
        labels.emplace(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            (*labels)[i] = static_cast<std::int32_t>(get_u32(bytes, payload_end + 4 * i));
        }
    }
    return FeatureSet(static_cast<std::size_t>(rows), cols, std::move(values), std::move(labels));
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("file", "cannot open " + path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_feature_file(const std::filesystem::path& path, const FeatureSet& features) {
    const auto bytes = encode_feature_file(features);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

FeatureSet read_feature_file(const std::filesystem::path& path) {
    const auto bytes = read_file_bytes(path);
    return decode_feature_file(bytes);
}

}  // namespace prd

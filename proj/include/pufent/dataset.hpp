#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pufent {

// Raw ring-oscillator frequencies, one row per device after orientation is
// applied. Entries must be finite and strictly positive.
struct FrequencyMatrix {
    std::size_t device_count = 0;
    std::size_t ro_count = 0;
    std::vector<double> values; // device-major

    double at(std::size_t device, std::size_t ro) const { return values[device * ro_count + ro]; }
};

enum class Orientation { DevicesInRows, DevicesInCols };

struct ParseOptions {
    Orientation orientation = Orientation::DevicesInRows;
    bool skip_header = false; // drop the first non-empty line
};

// Whitespace- or comma-separated numeric text; rejects ragged rows and bad
// tokens with a 1-based row/column location.
FrequencyMatrix parse_frequencies(std::string_view text, const ParseOptions& opts = {});
FrequencyMatrix load_frequencies(const std::filesystem::path& path, const ParseOptions& opts = {});

struct TieRecord {
    std::size_t device = 0;
    std::size_t bit = 0;
};

// Binary responses, one row of n bits per device. n = ro_count / 2 when
// derived by exclusive adjacent pairing.
struct DeviceResponses {
    std::size_t device_count = 0;
    std::size_t bit_count = 0;
    std::vector<std::uint8_t> bits; // device-major, values 0/1
    std::vector<TieRecord> ties;    // positions where the comparison tied (bit emitted as 0)

    std::uint8_t at(std::size_t device, std::size_t bit) const { return bits[device * bit_count + bit]; }
};

// Bit i of a device = 1 iff frequency of RO 2i exceeds frequency of RO 2i+1.
// Exact ties emit 0 and are recorded in the tie report.
DeviceResponses derive_responses(const FrequencyMatrix& freqs);

// Keeps the given device rows (indices into the original ordering).
DeviceResponses select_devices(const DeviceResponses& resp, const std::vector<std::size_t>& keep);

// Per-position probability of a 1-bit. When derived from responses, each p_i
// is the exact ratio ones_count / device_count.
struct BiasVector {
    std::vector<double> p;
    std::size_t size() const { return p.size(); }
};

// Relative frequency of 1 per position (the Bit-Alias). Counts are integers,
// so the result is independent of device order.
BiasVector bit_alias(const DeviceResponses& resp);

struct NormalizedBias {
    BiasVector bias;                 // all entries >= 0.5
    std::vector<std::uint8_t> flips; // 1 where p was replaced by 1-p
};

// Maps every p_i below 0.5 to 1-p_i and records the flip mask. Entropy
// estimates are unaffected; helper-data bits at flipped positions are
// understood as inverted.
NormalizedBias normalize_bias(const BiasVector& bias);

std::string flip_mask_string(const std::vector<std::uint8_t>& flips);

} // namespace pufent

#include "pufent/dataset.hpp"
#include "pufent/errors.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

namespace pufent {

namespace {

// One input line -> numeric tokens. Commas and semicolons count as separators.
std::vector<double> parse_line(std::string_view line, std::size_t line_no) {
    std::vector<double> out;
    std::size_t i = 0;
    const std::size_t n = line.size();
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == ',' || c == ';'; };
    while (i < n) {
        while (i < n && is_sep(line[i])) ++i;
        if (i >= n) break;
        std::size_t start = i;
        while (i < n && !is_sep(line[i])) ++i;
        std::string_view tok = line.substr(start, i - start);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("malformed numeric token '" + std::string(tok) + "'", line_no, out.size() + 1);
        if (!std::isfinite(v) || v <= 0.0)
            throw ParseError("frequency must be finite and positive, got '" + std::string(tok) + "'",
                             line_no, out.size() + 1);
        out.push_back(v);
    }
    return out;
}

} // namespace

FrequencyMatrix parse_frequencies(std::string_view text, const ParseOptions& opts) {
    std::vector<std::vector<double>> rows;
    std::size_t line_no = 0;
    bool header_pending = opts.skip_header;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (blank) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        rows.push_back(parse_line(line, line_no));
        if (rows.size() > 1 && rows.back().size() != rows.front().size())
            throw ShapeError("ragged input: line " + std::to_string(line_no) + " has " +
                             std::to_string(rows.back().size()) + " values, expected " +
                             std::to_string(rows.front().size()));
    }
    if (rows.empty() || rows.front().empty())
        throw ShapeError("empty input: no numeric rows found");

    FrequencyMatrix m;
    if (opts.orientation == Orientation::DevicesInRows) {
        m.device_count = rows.size();
        m.ro_count = rows.front().size();
        m.values.reserve(m.device_count * m.ro_count);
        for (const auto& r : rows) m.values.insert(m.values.end(), r.begin(), r.end());
    } else {
        m.device_count = rows.front().size();
        m.ro_count = rows.size();
        m.values.resize(m.device_count * m.ro_count);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                m.values[c * m.ro_count + r] = rows[r][c];
    }
    return m;
}

FrequencyMatrix load_frequencies(const std::filesystem::path& path, const ParseOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ShapeError("cannot open dataset file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_frequencies(buf.str(), opts);
}

DeviceResponses derive_responses(const FrequencyMatrix& freqs) {
    if (freqs.ro_count % 2 != 0)
        throw ShapeError("odd RO count " + std::to_string(freqs.ro_count) + ": exclusive pairing needs an even count");
    DeviceResponses resp;
    resp.device_count = freqs.device_count;
    resp.bit_count = freqs.ro_count / 2;
    resp.bits.resize(resp.device_count * resp.bit_count);
    for (std::size_t d = 0; d < freqs.device_count; ++d) {
        for (std::size_t i = 0; i < resp.bit_count; ++i) {
            double a = freqs.at(d, 2 * i);
            double b = freqs.at(d, 2 * i + 1);
            resp.bits[d * resp.bit_count + i] = a > b ? 1 : 0;
            if (a == b) resp.ties.push_back({d, i});
        }
    }
    return resp;
}

DeviceResponses select_devices(const DeviceResponses& resp, const std::vector<std::size_t>& keep) {
    DeviceResponses out;
    out.device_count = keep.size();
    out.bit_count = resp.bit_count;
    out.bits.reserve(keep.size() * resp.bit_count);
    for (std::size_t nd = 0; nd < keep.size(); ++nd) {
        std::size_t d = keep[nd];
        if (d >= resp.device_count)
            throw ShapeError("device index " + std::to_string(d) + " out of range (have " +
                             std::to_string(resp.device_count) + " devices)");
        out.bits.insert(out.bits.end(), resp.bits.begin() + d * resp.bit_count,
                        resp.bits.begin() + (d + 1) * resp.bit_count);
        for (const auto& t : resp.ties)
            if (t.device == d) out.ties.push_back({nd, t.bit});
    }
    return out;
}

BiasVector bit_alias(const DeviceResponses& resp) {
    if (resp.device_count == 0) throw ShapeError("bit_alias needs at least one device");
    BiasVector bias;
    bias.p.resize(resp.bit_count);
    for (std::size_t i = 0; i < resp.bit_count; ++i) {
        std::size_t ones = 0;
        for (std::size_t d = 0; d < resp.device_count; ++d) ones += resp.at(d, i);
        bias.p[i] = static_cast<double>(ones) / static_cast<double>(resp.device_count);
    }
    return bias;
}

NormalizedBias normalize_bias(const BiasVector& bias) {
    NormalizedBias out;
    out.bias.p.resize(bias.size());
    out.flips.resize(bias.size());
    for (std::size_t i = 0; i < bias.size(); ++i) {
        if (bias.p[i] < 0.5) {
            out.bias.p[i] = 1.0 - bias.p[i];
            out.flips[i] = 1;
        } else {
            out.bias.p[i] = bias.p[i];
            out.flips[i] = 0;
        }
    }
    return out;
}

std::string flip_mask_string(const std::vector<std::uint8_t>& flips) {
    std::string s;
    s.reserve(flips.size());
    for (auto f : flips) s.push_back(f ? '1' : '0');
    return s;
}

} // namespace pufent

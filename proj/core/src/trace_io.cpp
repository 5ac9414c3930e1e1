#include "flowtel/trace_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "flowtel/errors.hpp"

namespace flowtel {

namespace {

bool next_field(std::string_view& line, std::string_view& field) {
    if (line.empty()) return false;
    auto comma = line.find(',');
    if (comma == std::string_view::npos) {
        field = line;
        line = {};
    } else {
        field = line.substr(0, comma);
        line.remove_prefix(comma + 1);
    }
    return true;
}

template <typename T>
bool parse_uint(std::string_view text, T& out, std::uint64_t max) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || p != text.data() + text.size() || v > max) return false;
    out = static_cast<T>(v);
    return true;
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line_no, const std::string& what) {
    throw DataError(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<PacketRecord> read_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trace file: " + path);

    std::vector<PacketRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool have_prev = false;
    std::uint64_t prev_ts = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != kTraceHeader) parse_fail(path, 1, "bad trace header");
            continue;
        }
        if (line.empty()) continue;

        std::string_view rest(line);
        std::string_view f[8];
        for (int i = 0; i < 8; ++i) {
            if (!next_field(rest, f[i])) parse_fail(path, line_no, "expected 8 fields");
        }
        if (!rest.empty()) parse_fail(path, line_no, "trailing fields");

        PacketRecord rec;
        std::uint8_t label_raw = 0;
        if (!parse_uint(f[0], rec.ts_us, UINT64_MAX)) parse_fail(path, line_no, "bad ts_us");
        if (!parse_ipv4(f[1], rec.key.src_ip)) parse_fail(path, line_no, "bad src_ip");
        if (!parse_ipv4(f[2], rec.key.dst_ip)) parse_fail(path, line_no, "bad dst_ip");
        if (!parse_uint(f[3], rec.key.src_port, 65535)) parse_fail(path, line_no, "bad src_port");
        if (!parse_uint(f[4], rec.key.dst_port, 65535)) parse_fail(path, line_no, "bad dst_port");
        if (!parse_uint(f[5], rec.key.proto, 255)) parse_fail(path, line_no, "bad proto");
        if (!parse_uint(f[6], rec.payload_len, 65535)) parse_fail(path, line_no, "bad payload_len");
        if (!parse_uint(f[7], label_raw, 1)) parse_fail(path, line_no, "bad label");
        rec.label = static_cast<ClassLabel>(label_raw);

        if (have_prev && rec.ts_us < prev_ts)
            parse_fail(path, line_no, "decreasing timestamp");
        prev_ts = rec.ts_us;
        have_prev = true;
        records.push_back(rec);
    }
    return records;
}

void write_trace(const std::vector<PacketRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open trace file for writing: " + path);
    out << kTraceHeader << '\n';
    for (const PacketRecord& r : records) {
        out << r.ts_us << ',' << format_ipv4(r.key.src_ip) << ',' << format_ipv4(r.key.dst_ip)
            << ',' << r.key.src_port << ',' << r.key.dst_port << ',' << unsigned(r.key.proto)
            << ',' << r.payload_len << ',' << unsigned(static_cast<std::uint8_t>(r.label))
            << '\n';
    }
    if (!out.flush()) throw IoError("write failed: " + path);
}

}  // namespace flowtel

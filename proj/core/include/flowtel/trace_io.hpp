#pragma once

#include <string>
#include <vector>

#include "flowtel/flow_key.hpp"

namespace flowtel {

/// Column header every trace file starts with.
inline constexpr const char* kTraceHeader = "ts_us,src_ip,dst_ip,src_port,dst_port,proto,payload_len,label";

/// Parse a trace CSV. Throws DataError naming the offending line on a
/// malformed field or a decreasing timestamp, IoError if the file
/// cannot be opened. An empty file yields an empty trace.
std::vector<PacketRecord> read_trace(const std::string& path);

/// Write records (already time-ordered) as trace CSV, LF line endings.
/// read_trace(write_trace(r)) reproduces r exactly.
void write_trace(const std::vector<PacketRecord>& records, const std::string& path);

}  // namespace flowtel

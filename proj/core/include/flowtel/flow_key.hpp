#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace flowtel {

enum class ClassLabel : std::uint8_t {
    benign = 0,
    ddos = 1,
};

/// 5-tuple identifying a unidirectional flow.
struct FlowKey {
    std::uint32_t src_ip = 0;  // host byte order
    std::uint32_t dst_ip = 0;
    std::uint16_t src_port = 0;
    std::uint16_t dst_port = 0;
    std::uint8_t proto = 0;

    friend bool operator==(const FlowKey&, const FlowKey&) = default;
    friend auto operator<=>(const FlowKey&, const FlowKey&) = default;

    /// Canonical 13-byte serialization: src_ip, dst_ip, src_port,
    /// dst_port, proto, each big-endian. Hash input and wire layout
    /// both use exactly these bytes.
    std::array<std::uint8_t, 13> bytes() const;
};

/// Swap endpoints: the key of the opposite direction of the same
/// bidirectional flow. Involution: reverse_key(reverse_key(k)) == k.
FlowKey reverse_key(const FlowKey& key);

/// Direction-independent identity of a bidirectional flow: the
/// lexicographically smaller of the key bytes and the reversed key bytes.
std::array<std::uint8_t, 13> canonical_bytes(const FlowKey& key);

/// One observed packet. Timestamps are microseconds since trace start
/// and must be non-decreasing within a trace.
struct PacketRecord {
    std::uint64_t ts_us = 0;
    FlowKey key;
    std::uint16_t payload_len = 0;
    ClassLabel label = ClassLabel::benign;

    friend bool operator==(const PacketRecord&, const PacketRecord&) = default;
};

std::string format_ipv4(std::uint32_t ip);
bool parse_ipv4(std::string_view text, std::uint32_t& ip);

}  // namespace flowtel

#include "flowtel/flow_key.hpp"

#include <charconv>
#include <cstdio>

namespace flowtel {

std::array<std::uint8_t, 13> FlowKey::bytes() const {
    std::array<std::uint8_t, 13> out;
    out[0] = static_cast<std::uint8_t>(src_ip >> 24);
    out[1] = static_cast<std::uint8_t>(src_ip >> 16);
    out[2] = static_cast<std::uint8_t>(src_ip >> 8);
    out[3] = static_cast<std::uint8_t>(src_ip);
    out[4] = static_cast<std::uint8_t>(dst_ip >> 24);
    out[5] = static_cast<std::uint8_t>(dst_ip >> 16);
    out[6] = static_cast<std::uint8_t>(dst_ip >> 8);
    out[7] = static_cast<std::uint8_t>(dst_ip);
    out[8] = static_cast<std::uint8_t>(src_port >> 8);
    out[9] = static_cast<std::uint8_t>(src_port);
    out[10] = static_cast<std::uint8_t>(dst_port >> 8);
    out[11] = static_cast<std::uint8_t>(dst_port);
    out[12] = proto;
    return out;
}

FlowKey reverse_key(const FlowKey& key) {
    FlowKey r = key;
    r.src_ip = key.dst_ip;
    r.dst_ip = key.src_ip;
    r.src_port = key.dst_port;
    r.dst_port = key.src_port;
    return r;
}

std::array<std::uint8_t, 13> canonical_bytes(const FlowKey& key) {
    auto fwd = key.bytes();
    auto bwd = reverse_key(key).bytes();
    return fwd < bwd ? fwd : bwd;
}

std::string format_ipv4(std::uint32_t ip) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", (ip >> 24) & 0xff, (ip >> 16) & 0xff,
                  (ip >> 8) & 0xff, ip & 0xff);
    return buf;
}

bool parse_ipv4(std::string_view text, std::uint32_t& ip) {
    std::uint32_t value = 0;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int octet = 0; octet < 4; ++octet) {
        unsigned v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc{} || v > 255 || next == p) return false;
        value = (value << 8) | v;
        p = next;
        if (octet < 3) {
            if (p == end || *p != '.') return false;
            ++p;
        }
    }
    if (p != end) return false;
    ip = value;
    return true;
}

}  // namespace flowtel

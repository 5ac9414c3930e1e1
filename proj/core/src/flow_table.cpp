#include "flowtel/flow_table.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "flowtel/saturate.hpp"

namespace flowtel {

bool valid(const RegisterConfig& cfg) {
    return cfg.m_cells >= 2 && std::has_single_bit(cfg.m_cells);
}

std::uint32_t fnv1a32(std::span<const std::uint8_t> data) {
    std::uint32_t h = 0x811c9dc5u;
    for (std::uint8_t b : data) {
        h ^= b;
        h *= 0x01000193u;
    }
    return h;
}

FlowIndex hash_index(const FlowKey& key, const RegisterConfig& cfg) {
    auto bytes = key.bytes();
    return fnv1a32(bytes) & (cfg.m_cells - 1);
}

std::pair<FlowIndex, FlowIndex> paired_indexes(const FlowKey& key, const RegisterConfig& cfg) {
    return {hash_index(key, cfg), hash_index(reverse_key(key), cfg)};
}

double collision_probability(std::uint64_t m_cells, std::uint64_t flows) {
    if (m_cells == 0) throw std::domain_error("collision_probability: register size must be >= 1");
    if (flows == 0) return 0.0;
    if (m_cells == 1) return 1.0;
    // 1 - (1 - 1/M)^N via expm1/log1p to keep precision at large M.
    return -std::expm1(static_cast<double>(flows) * std::log1p(-1.0 / static_cast<double>(m_cells)));
}

std::uint64_t required_register_size(std::uint64_t flows, double c_max) {
    if (flows == 0) throw std::invalid_argument("required_register_size: flows must be >= 1");
    if (!(c_max > 0.0) || !(c_max < 1.0))
        throw std::invalid_argument("required_register_size: target must be in (0, 1)");
    std::uint64_t m = 2;
    while (collision_probability(m, flows) > c_max) {
        if (m >= (std::uint64_t{1} << 62))
            throw std::domain_error("required_register_size: no attainable register size");
        m <<= 1;
    }
    return m;
}

void DirectionStats::add_packet(std::uint16_t payload_len) {
    const auto len = static_cast<std::uint32_t>(payload_len);
    pkt_count = sat_add(pkt_count, 1u);
    len_sum = sat_add(len_sum, len);
    len_sq_sum = sat_add(len_sq_sum, static_cast<std::uint64_t>(len) * len);
}

MatrixState::MatrixState(const RegisterConfig& cfg) {
    if (!valid(cfg)) throw std::invalid_argument("register size must be a power of two >= 2");
    dir_stats.resize(cfg.m_cells);
    bidir.resize(cfg.m_cells);
    key_echo.resize(cfg.m_cells);
}

void MatrixState::clear_column(FlowIndex fwd, FlowIndex bwd) {
    dir_stats[fwd] = DirectionStats{};
    dir_stats[bwd] = DirectionStats{};
    bidir[fwd] = BidirAggregates{};
    key_echo[fwd] = FlowKey{};
    key_echo[bwd] = FlowKey{};
}

}  // namespace flowtel

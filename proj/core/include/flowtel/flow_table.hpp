#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "flowtel/flow_key.hpp"

namespace flowtel {

inline constexpr int kLaneCount = 2;
using LaneId = int;
using FlowIndex = std::uint32_t;

/// Geometry of one statistics register. M must be a power of two so the
/// modulo reduction is a mask, as it would be in hardware.
struct RegisterConfig {
    std::uint32_t m_cells = 1024;
};

bool valid(const RegisterConfig& cfg);

std::uint32_t fnv1a32(std::span<const std::uint8_t> data);

/// Map a flow key to its register column: FNV-1a over the canonical
/// 13-byte key, reduced mod M. Stable across runs and platforms.
FlowIndex hash_index(const FlowKey& key, const RegisterConfig& cfg);

/// (index of key, index of reversed key). paired_indexes(reverse_key(k))
/// is the same pair swapped.
std::pair<FlowIndex, FlowIndex> paired_indexes(const FlowKey& key, const RegisterConfig& cfg);

/// C = 1 - (1 - 1/M)^N: chance that any of N keys lands in one fixed
/// cell of an M-cell register. Throws std::domain_error for m == 0.
double collision_probability(std::uint64_t m_cells, std::uint64_t flows);

/// Smallest power-of-two M with collision_probability(M, n) <= c_max.
std::uint64_t required_register_size(std::uint64_t flows, double c_max);

/// Per-direction aggregates of one register column. All sums saturate.
struct DirectionStats {
    std::uint32_t pkt_count = 0;
    std::uint32_t len_sum = 0;
    std::uint64_t len_sq_sum = 0;

    void add_packet(std::uint16_t payload_len);
    friend bool operator==(const DirectionStats&, const DirectionStats&) = default;
};

/// Whole-flow aggregates, stored only in the column that instantiated
/// the flow (its forward home).
struct BidirAggregates {
    std::uint64_t first_ts_us = 0;
    std::uint64_t last_ts_us = 0;
    std::uint64_t iat_sum = 0;
    std::uint64_t iat_sq_sum = 0;
    std::uint32_t total_pkts = 0;

    bool occupied() const { return total_pkts > 0; }
    friend bool operator==(const BidirAggregates&, const BidirAggregates&) = default;
};

/// One lane's register matrix: M columns of direction stats, bidirectional
/// aggregates, and the 5-tuple that instantiated each occupied column
/// (so reports can carry flow identity).
struct MatrixState {
    explicit MatrixState(const RegisterConfig& cfg);

    std::vector<DirectionStats> dir_stats;
    std::vector<BidirAggregates> bidir;
    std::vector<FlowKey> key_echo;

    /// Zero both direction columns of a reported flow, the bidirectional
    /// column at its forward home, and the key echo slots.
    void clear_column(FlowIndex fwd, FlowIndex bwd);

    bool column_occupied(FlowIndex idx) const { return dir_stats[idx].pkt_count > 0; }
};

}  // namespace flowtel

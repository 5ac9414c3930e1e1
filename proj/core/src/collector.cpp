#include "flowtel/collector.hpp"

#include "flowtel/saturate.hpp"

namespace flowtel {

namespace {

void touch_bidir(BidirAggregates& agg, std::uint64_t ts_us) {
    const std::uint64_t iat = ts_us - agg.last_ts_us;
    agg.iat_sum = sat_add(agg.iat_sum, iat);
    agg.iat_sq_sum = sat_add(agg.iat_sq_sum, sat_mul_sq(iat));
    agg.last_ts_us = ts_us;
    agg.total_pkts = sat_add(agg.total_pkts, 1u);
}

}  // namespace

IngestOutcome ingest_packet(const PacketRecord& pkt, LaneId lane, MatrixState& matrix,
                            const RegisterConfig& cfg) {
    const auto [own_idx, rev_idx] = paired_indexes(pkt.key, cfg);

    IngestOutcome out;
    out.lane = lane;
    out.fwd_idx = own_idx;
    out.bwd_idx = rev_idx;

    const bool own_empty = matrix.dir_stats[own_idx].pkt_count == 0;
    const bool rev_empty = matrix.dir_stats[rev_idx].pkt_count == 0;

    if (own_empty && rev_empty) {
        // First packet of the flow in this window: its direction defines FWD.
        out.new_flow = true;
        out.direction = Direction::fwd;
        matrix.key_echo[own_idx] = pkt.key;
        BidirAggregates& agg = matrix.bidir[own_idx];
        agg.first_ts_us = pkt.ts_us;
        agg.last_ts_us = pkt.ts_us;
        agg.iat_sum = 0;
        agg.iat_sq_sum = 0;
        agg.total_pkts = 1;
    } else if (matrix.bidir[own_idx].occupied() && matrix.key_echo[own_idx] == pkt.key) {
        out.direction = Direction::fwd;
        touch_bidir(matrix.bidir[own_idx], pkt.ts_us);
    } else if (matrix.bidir[rev_idx].occupied()) {
        out.direction = Direction::bwd;
        touch_bidir(matrix.bidir[rev_idx], pkt.ts_us);
    } else if (matrix.bidir[own_idx].occupied()) {
        // Collision: a different flow is homed here; merge into it.
        out.direction = Direction::bwd;
        touch_bidir(matrix.bidir[own_idx], pkt.ts_us);
    } else {
        // Collision debris: direction cells are occupied but neither paired
        // column is a home. Count the packet, nothing else to update.
        out.direction = Direction::bwd;
    }

    matrix.dir_stats[own_idx].add_packet(pkt.payload_len);
    return out;
}

}  // namespace flowtel

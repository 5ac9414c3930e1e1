#pragma once

#include "flowtel/flow_key.hpp"
#include "flowtel/flow_table.hpp"

namespace flowtel {

enum class Direction : std::uint8_t { fwd, bwd };

struct IngestOutcome {
    bool new_flow = false;
    LaneId lane = 0;
    FlowIndex fwd_idx = 0;  // index of the packet's own key
    FlowIndex bwd_idx = 0;  // index of the reversed key
    Direction direction = Direction::fwd;
};

/// Update one lane's matrix with one packet.
///
/// A packet whose key and reversed key both land on empty columns opens a
/// new bidirectional flow homed at the key's own column; that column
/// records the key and all whole-flow aggregates. Later packets locate the
/// home through whichever paired column carries a matching echo and update
/// inter-arrival sums there. Hash collisions are not resolved: a colliding
/// flow's packets merge into the column they land on.
IngestOutcome ingest_packet(const PacketRecord& pkt, LaneId lane, MatrixState& matrix,
                            const RegisterConfig& cfg);

}  // namespace flowtel

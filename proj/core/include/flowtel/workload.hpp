#pragma once

#include <cstdint>
#include <vector>

#include "flowtel/flow_key.hpp"

namespace flowtel {

/// Parameters for a labeled synthetic benign/DDoS trace.
///
/// Each flow gets a distinct 5-tuple and a start time uniform in
/// [0, duration). From its start it emits packets with exponential
/// inter-arrivals (per-class mean) until the trace ends; payload sizes
/// are normal draws (per-class mean/std) clamped to [1, 1460]. The
/// first packet of a flow travels in the forward direction, later ones
/// pick a direction with probability 1/2 each.
struct WorkloadSpec {
    double duration_s = 60.0;
    std::uint32_t benign_flows = 100;
    std::uint32_t ddos_flows = 100;
    double benign_payload_mean = 600.0;
    double benign_payload_std = 300.0;
    double ddos_payload_mean = 60.0;
    double ddos_payload_std = 5.0;
    double benign_iat_mean_us = 10000.0;
    double ddos_iat_mean_us = 500.0;
    std::uint64_t rng_seed = 1;
};

/// Throws std::invalid_argument if the spec is unusable.
void validate(const WorkloadSpec& spec);

/// Deterministic for a given seed: same spec, same trace, byte for byte.
/// Output is merged over all flows and sorted by timestamp.
std::vector<PacketRecord> generate_workload(const WorkloadSpec& spec);

}  // namespace flowtel

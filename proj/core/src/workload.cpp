#include "flowtel/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace flowtel {

namespace {

// Distribution transforms are hand-rolled on top of mt19937_64 because
// std::normal_distribution and friends differ between standard library
// implementations; the trace for a given seed must not.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {  // [0, 1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t exponential_us(double mean_us) {
        double u = uniform01();
        double v = -mean_us * std::log1p(-u);
        return static_cast<std::uint64_t>(std::llround(v));
    }

    std::uint16_t payload(double mean, double std) {
        // Box-Muller, first branch only.
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        long long len = std::llround(mean + std * z);
        return static_cast<std::uint16_t>(std::clamp<long long>(len, 1, 1460));
    }

    bool coin() { return (engine_() & 1) != 0; }

private:
    std::mt19937_64 engine_;
};

constexpr std::uint32_t kMaxFlowsPerClass = 65536;

FlowKey flow_key_for(ClassLabel cls, std::uint32_t index) {
    FlowKey k;
    std::uint32_t class_octet = cls == ClassLabel::benign ? 0u : 1u;
    k.src_ip = (10u << 24) | (class_octet << 16) | (index & 0xffffu);
    k.dst_ip = (192u << 24) | (168u << 16) | 10u;
    k.src_port = static_cast<std::uint16_t>(1024 + index % 60000);
    k.dst_port = cls == ClassLabel::benign ? 443 : 80;
    k.proto = cls == ClassLabel::benign ? 6 : 17;
    return k;
}

}  // namespace

void validate(const WorkloadSpec& spec) {
    if (!(spec.duration_s > 0)) throw std::invalid_argument("workload: duration must be > 0");
    if (spec.benign_flows > kMaxFlowsPerClass || spec.ddos_flows > kMaxFlowsPerClass)
        throw std::invalid_argument("workload: at most 65536 flows per class");
    if (!(spec.benign_payload_mean > 0) || !(spec.ddos_payload_mean > 0))
        throw std::invalid_argument("workload: payload means must be > 0");
    if (!(spec.benign_iat_mean_us > 0) || !(spec.ddos_iat_mean_us > 0))
        throw std::invalid_argument("workload: inter-arrival means must be > 0");
    if (spec.benign_payload_std < 0 || spec.ddos_payload_std < 0)
        throw std::invalid_argument("workload: payload stds must be >= 0");
}

std::vector<PacketRecord> generate_workload(const WorkloadSpec& spec) {
    validate(spec);
    Draw draw(spec.rng_seed);

    const auto duration_us =
        static_cast<std::uint64_t>(std::llround(spec.duration_s * 1e6));
    std::vector<PacketRecord> trace;

    auto emit_flow = [&](ClassLabel cls, std::uint32_t index) {
        const bool benign = cls == ClassLabel::benign;
        const double payload_mean = benign ? spec.benign_payload_mean : spec.ddos_payload_mean;
        const double payload_std = benign ? spec.benign_payload_std : spec.ddos_payload_std;
        const double iat_mean = benign ? spec.benign_iat_mean_us : spec.ddos_iat_mean_us;
        const FlowKey fwd = flow_key_for(cls, index);
        const FlowKey bwd = reverse_key(fwd);

        std::uint64_t ts =
            static_cast<std::uint64_t>(draw.uniform01() * static_cast<double>(duration_us));
        bool first = true;
        while (ts < duration_us) {
            PacketRecord rec;
            rec.ts_us = ts;
            rec.payload_len = draw.payload(payload_mean, payload_std);
            rec.key = (first || draw.coin()) ? fwd : bwd;
            rec.label = cls;
            trace.push_back(rec);
            first = false;
            ts += draw.exponential_us(iat_mean);
        }
    };

    for (std::uint32_t i = 0; i < spec.benign_flows; ++i) emit_flow(ClassLabel::benign, i);
    for (std::uint32_t i = 0; i < spec.ddos_flows; ++i) emit_flow(ClassLabel::ddos, i);

    std::stable_sort(trace.begin(), trace.end(),
                     [](const PacketRecord& a, const PacketRecord& b) { return a.ts_us < b.ts_us; });
    return trace;
}

}  // namespace flowtel

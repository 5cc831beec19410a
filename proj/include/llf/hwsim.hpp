#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace llf {

inline constexpr int64_t kUnlimitedBandwidth = INT64_MAX;

/// Start-up allowance of one LPU instance in the replication model:
/// streaming the first full sub-image through remap, both convolution
/// engines and the resampling units before its first coefficient emerges.
inline constexpr int64_t kReplicationFillCycles = 48;

/// Bandwidth-constrained delivery into the nine input streams.
/// Bandwidth is aggregate bits per cycle shared equally across the streams
/// that still have data to receive (fractional carry keeps the split exact
/// over time, and keeps the three channels of one level perfectly
/// symmetric).
struct StreamConfig {
  int64_t total_bandwidth_bits = 256;
  int pixel_bits = 8;
  int n_streams = 9;
};

struct CycleStats {
  int64_t active = 0;
  int64_t inactive = 0;
  int64_t total = 0;
  double efficiency = 0.0;
};

struct LpuStats {
  int channel = 0;
  int level = 0;
  CycleStats cycles;
};

/// Discrete-time dataflow simulation of the nine LPU input streams.
/// An LPU consumes one full sub-image column per active cycle (the engine's
/// streaming throughput); a cycle with no complete column in the FIFO counts
/// as inactive. Each LPU's stats run until its own work completes.
std::vector<LpuStats> simulate_lpus(int image_w, int image_h, const StreamConfig& cfg);

/// Replication of the busiest unit (the band-0 LPU): output pixels are
/// partitioned contiguously into shares differing by at most one.
struct ReplicationPlan {
  int n_instances = 1;
  double lut_pct_per_instance = 1.28;
};

struct ReplicationReport {
  int n_instances = 0;
  int64_t latency_cycles = 0;
  double resource_pct = 0.0;
};

/// Completion time is the largest share's column count plus a fixed fill
/// allowance; resources grow by lut_pct_per_instance per replica on top of
/// the base design.
ReplicationReport simulate_replication(int image_w, int image_h, const ReplicationPlan& plan);

struct BandwidthScenarioStats {
  std::string scenario;
  int64_t bandwidth_bits = 0;
  std::vector<LpuStats> per_lpu;
};

struct ReplicationScenarioStats {
  std::string scenario;
  std::vector<ReplicationReport> rows;
};

/// Deterministic CSV, one row per LPU level (channels are symmetric by
/// construction), ordered by scenario then LPU index.
std::string emit_sim_csv(const std::vector<BandwidthScenarioStats>& stats);
std::string emit_sim_csv(const std::vector<ReplicationScenarioStats>& stats);

}  // namespace llf

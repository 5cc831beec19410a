#include "llf/hwsim.hpp"

#include <algorithm>
#include <cstdio>

#include "llf/errors.hpp"

namespace llf {

namespace {

constexpr int kChannels = 3;
constexpr int kLevels = 3;

// LUT budget of the full nine-unit design.
constexpr double kFullDesignLutPct = 19.0;

int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

// Sub-image column height (and width) for one output coefficient at `level`:
// twice the nominal half-width plus one.
int64_t column_px(int level) { return (int64_t{2} << (level + 2)) - 1; }

int64_t coefficients(int image_w, int image_h, int level) {
  return ceil_div(image_w, int64_t{1} << level) * ceil_div(image_h, int64_t{1} << level);
}

struct StreamState {
  int64_t col_px = 0;       // pixels per consumed column
  int64_t cols_total = 0;   // columns of work
  int64_t px_total = 0;     // pixels the stream must deliver
  int64_t delivered = 0;
  int64_t fifo = 0;
  int64_t cols_done = 0;
  int64_t active = 0;
  int64_t done_cycle = -1;
};

}  // namespace

std::vector<LpuStats> simulate_lpus(int image_w, int image_h, const StreamConfig& cfg) {
  if (image_w < 1 || image_h < 1) throw ValidationError("image dimensions must be positive");
  if (cfg.n_streams < 1) throw ValidationError("need at least one stream");
  const bool unlimited = cfg.total_bandwidth_bits == kUnlimitedBandwidth;
  if (!unlimited && cfg.total_bandwidth_bits < cfg.pixel_bits) {
    throw ValidationError("bandwidth below one pixel per cycle makes no progress");
  }

  std::vector<StreamState> streams(kChannels * kLevels);
  for (int ch = 0; ch < kChannels; ++ch) {
    for (int lv = 0; lv < kLevels; ++lv) {
      StreamState& s = streams[ch * kLevels + lv];
      s.col_px = column_px(lv);
      s.cols_total = coefficients(image_w, image_h, lv) * s.col_px;  // square sub-image
      s.px_total = s.cols_total * s.col_px;
      if (unlimited) {
        s.fifo = s.px_total;
        s.delivered = s.px_total;
      }
    }
  }

  const int64_t px_per_cycle = unlimited ? 0 : cfg.total_bandwidth_bits / cfg.pixel_bits;
  int64_t carry = 0;  // undelivered pixel budget carried between cycles
  int64_t cycle = 0;
  int pending = static_cast<int>(streams.size());
  while (pending > 0) {
    if (!unlimited) {
      // Equal split of this cycle's pixel budget across the streams that
      // still have data to receive; the remainder carries over, which keeps
      // the three channels of a level in lockstep.
      carry += px_per_cycle;
      int hungry = 0;
      for (const StreamState& s : streams) hungry += s.delivered < s.px_total ? 1 : 0;
      while (hungry > 0) {
        const int64_t share = carry / hungry;
        if (share == 0) break;
        int64_t spent = 0;
        int still_hungry = 0;
        for (StreamState& s : streams) {
          if (s.delivered >= s.px_total) continue;
          const int64_t d = std::min(share, s.px_total - s.delivered);
          s.delivered += d;
          s.fifo += d;
          spent += d;
          still_hungry += s.delivered < s.px_total ? 1 : 0;
        }
        carry -= spent;
        if (still_hungry == hungry) break;  // everyone got a full share
        hungry = still_hungry;
      }
    }
    for (StreamState& s : streams) {
      if (s.cols_done >= s.cols_total) continue;
      if (s.fifo >= s.col_px) {
        s.fifo -= s.col_px;
        ++s.cols_done;
        ++s.active;
        if (s.cols_done == s.cols_total) {
          s.done_cycle = cycle;
          --pending;
        }
      }
    }
    ++cycle;
  }

  std::vector<LpuStats> stats;
  stats.reserve(streams.size());
  for (int ch = 0; ch < kChannels; ++ch) {
    for (int lv = 0; lv < kLevels; ++lv) {
      const StreamState& s = streams[ch * kLevels + lv];
      CycleStats c;
      c.active = s.active;
      c.total = s.done_cycle + 1;
      c.inactive = c.total - c.active;
      c.efficiency = c.total > 0 ? static_cast<double>(c.active) / static_cast<double>(c.total)
                                 : 0.0;
      stats.push_back(LpuStats{ch, lv, c});
    }
  }
  return stats;
}

ReplicationReport simulate_replication(int image_w, int image_h, const ReplicationPlan& plan) {
  if (image_w < 1 || image_h < 1) throw ValidationError("image dimensions must be positive");
  if (plan.n_instances < 1 || plan.n_instances > 6) {
    throw ValidationError("instance count must be between 1 and 6");
  }
  const int64_t pixels = coefficients(image_w, image_h, 0);
  const int64_t largest_share = ceil_div(pixels, plan.n_instances);
  ReplicationReport report;
  report.n_instances = plan.n_instances;
  report.latency_cycles = largest_share * column_px(0) + kReplicationFillCycles;
  report.resource_pct =
      kFullDesignLutPct + (plan.n_instances - 1) * plan.lut_pct_per_instance;
  return report;
}

namespace {

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string bandwidth_label(int64_t bits) {
  return bits == kUnlimitedBandwidth ? "inf" : std::to_string(bits);
}

}  // namespace

std::string emit_sim_csv(const std::vector<BandwidthScenarioStats>& stats) {
  if (stats.empty()) throw ValidationError("no simulation results to emit");
  std::string csv = "scenario,lpu,bandwidth_bits,active,inactive,efficiency\n";
  for (const BandwidthScenarioStats& sc : stats) {
    for (int lv = 0; lv < kLevels; ++lv) {
      const LpuStats* row = nullptr;
      for (const LpuStats& s : sc.per_lpu) {
        if (s.channel == 0 && s.level == lv) row = &s;
      }
      if (row == nullptr) continue;
      csv += sc.scenario + ",L" + std::to_string(lv + 1) + "," +
             bandwidth_label(sc.bandwidth_bits) + "," + std::to_string(row->cycles.active) +
             "," + std::to_string(row->cycles.inactive) + "," +
             format_double("%.4f", row->cycles.efficiency) + "\n";
    }
  }
  return csv;
}

std::string emit_sim_csv(const std::vector<ReplicationScenarioStats>& stats) {
  if (stats.empty()) throw ValidationError("no simulation results to emit");
  std::string csv = "scenario,n_instances,latency_cycles,resource_pct\n";
  for (const ReplicationScenarioStats& sc : stats) {
    for (const ReplicationReport& r : sc.rows) {
      csv += sc.scenario + "," + std::to_string(r.n_instances) + "," +
             std::to_string(r.latency_cycles) + "," + format_double("%.2f", r.resource_pct) +
             "\n";
    }
  }
  return csv;
}

}  // namespace llf

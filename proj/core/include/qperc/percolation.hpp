#ifndef QPERC_PERCOLATION_HPP
#define QPERC_PERCOLATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qperc/components.hpp"
#include "qperc/generators.hpp"
#include "qperc/graph.hpp"
#include "qperc/qswap.hpp"
#include "qperc/rng.hpp"

namespace qperc {

struct SweepConfig {
  std::vector<double> phi_grid;           // threshold scans (ascending)
  std::vector<double> f_grid;             // fidelity scans (ascending)
  std::vector<std::int64_t> l_values;     // limited scans
  int replicas = 1;
  std::int64_t source_sample = 1000;
  double f_min = 2.0 / 3.0;
  std::uint64_t seed = 0;
  int threads = 1;
  int bootstrap_resamples = 1000;
};

/// One output row of a sweep; fields that do not apply to the scan kind stay
/// NaN (l stays -1).
struct ScanRow {
  double x = 0.0;        // phi1 or F
  std::int64_t l = -1;   // path-length limit where applicable
  double S = nan();      // giant fraction
  double S_err = nan();
  double s_avg = nan();  // giant-excluded mean finite-component size
  double s_avg_err = nan();
  double sl_over_n = nan();  // <s_l> / N
  double sl_err = nan();
  double analytic = nan();   // filled by compare experiments

  static double nan();
};

struct SweepResult {
  std::vector<ScanRow> rows;
  std::vector<std::int64_t> histogram;  // n(l): ordered pair counts per distance
  double l_av = 0.0;
  double threshold_peak = -1.0;   // susceptibility-peak estimate (primary)
  double threshold_onset = -1.0;  // first grid point with S > 2e-3 (secondary)
  std::map<int, std::int64_t> swap_eligible;
  std::map<int, std::int64_t> swap_performed;

  /// Pooled measured eta_q over all replicas.
  std::map<int, double> measured_eta() const;
};

/// Keeps each live edge independently with the probability of its class and
/// returns the component census of the kept subgraph.
ComponentStats bond_percolate(const Graph& g, double p_original, double p_newborn, Rng& rng);

/// Full threshold scan: per replica, generate a graph (stream kGenerate),
/// optionally q-swap it (stream kSwap), then for every phi1 grid point
/// occupy Original edges with phi2_of_phi1(phi1) and Newborn edges with phi1
/// (stream kPercolate, one fresh draw per edge per replica per point).
/// Threshold estimators: the phi1 maximizing the replica-averaged
/// giant-excluded <s> (primary), and the S-onset S > 2e-3 (secondary).
SweepResult threshold_scan(const GeneratorSpec& gen, const SwapStrategy* strategy,
                           const SweepConfig& cfg);

/// Mean l-limited cluster size <s_l>/N over sampled sources for each l
/// (negative l means unlimited), plus the distance histogram n(l) and the
/// mean path length over the same sources.  All edges count as occupied.
SweepResult limited_component_scan(const Graph& g, const std::vector<std::int64_t>& l_values,
                                   std::int64_t source_sample, Rng& rng);

/// Per singlet fraction F: alpha = (4F-1)/3, l = max_path_length(f_min,
/// alpha), then the l-limited mean component size over sampled sources
/// (component saturation when l is unbounded at F = 1).
SweepResult fidelity_scan(const Graph& g, const std::vector<double>& f_grid, double f_min,
                          std::int64_t source_sample, Rng& rng);

/// Replica-mean rows with bootstrap standard errors (used by the experiment
/// layer to pool limited/fidelity scans over replicas); rows must align.
SweepResult combine_replicas(const std::vector<SweepResult>& per_replica, int bootstrap_resamples,
                             std::uint64_t seed);

/// Runs work(replica_index) for indices 0..replicas-1 across the given
/// number of threads; deterministic output placement is the caller's job.
void parallel_replicas(int replicas, int threads, const std::function<void(int)>& work);

}  // namespace qperc

#endif

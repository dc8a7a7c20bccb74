#include "qperc/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "qperc/bfs.hpp"
#include "qperc/errors.hpp"
#include "qperc/quantum.hpp"

namespace qperc {

double ScanRow::nan() { return std::numeric_limits<double>::quiet_NaN(); }

std::map<int, double> SweepResult::measured_eta() const {
  std::map<int, double> eta;
  for (const auto& [q, eligible] : swap_eligible) {
    if (eligible == 0) continue;
    const auto it = swap_performed.find(q);
    const auto done = it == swap_performed.end() ? 0 : it->second;
    eta[q] = static_cast<double>(done) / static_cast<double>(eligible);
  }
  return eta;
}

ComponentStats bond_percolate(const Graph& g, double p_original, double p_newborn, Rng& rng) {
  if (!(p_original >= 0.0 && p_original <= 1.0) || !(p_newborn >= 0.0 && p_newborn <= 1.0))
    throw DomainError("occupation probabilities must be in [0, 1]");
  UnionFind uf(g.vertex_count());
  for (EdgeId i = 0; i < g.edge_slots(); ++i) {
    const Edge& e = g.edge(i);
    if (!e.alive) continue;
    const double p = e.cls == EdgeClass::Original ? p_original : p_newborn;
    if (rng.uniform() < p) uf.unite(e.u, e.v);
  }
  return components_from_union_find(uf);
}

void parallel_replicas(int replicas, int threads, const std::function<void(int)>& work) {
  threads = std::max(1, std::min(threads, replicas));
  if (threads == 1) {
    for (int i = 0; i < replicas; ++i) work(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      try {
        for (int i = t; i < replicas; i += threads) work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

struct MeanErr {
  double mean = ScanRow::nan();
  double err = ScanRow::nan();
};

MeanErr mean_and_stderr(const std::vector<double>& values) {
  MeanErr out;
  const auto n = static_cast<double>(values.size());
  if (values.empty()) return out;
  double sum = 0.0;
  for (const double v : values) sum += v;
  out.mean = sum / n;
  if (values.size() < 2) {
    out.err = 0.0;
    return out;
  }
  double ss = 0.0;
  for (const double v : values) ss += (v - out.mean) * (v - out.mean);
  out.err = std::sqrt(ss / (n * (n - 1.0)));
  return out;
}

// Replica-level bootstrap of the mean (resampling replica means).
double bootstrap_stderr(const std::vector<double>& replica_means, int resamples, Rng& rng) {
  const std::size_t r = replica_means.size();
  if (r < 2) return 0.0;
  double sum = 0.0, ss = 0.0;
  for (int b = 0; b < resamples; ++b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r; ++i)
      acc += replica_means[rng.uniform_below(static_cast<std::uint64_t>(r))];
    const double mean = acc / static_cast<double>(r);
    sum += mean;
    ss += mean * mean;
  }
  const double mb = sum / resamples;
  const double var = ss / resamples - mb * mb;
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

}  // namespace

SweepResult threshold_scan(const GeneratorSpec& gen, const SwapStrategy* strategy,
                           const SweepConfig& cfg) {
  if (cfg.phi_grid.empty()) throw DomainError("threshold_scan requires a phi grid");
  if (!std::is_sorted(cfg.phi_grid.begin(), cfg.phi_grid.end()))
    throw DomainError("phi grid must be ascending");
  if (cfg.replicas < 1) throw DomainError("threshold_scan requires replicas >= 1");

  const std::size_t points = cfg.phi_grid.size();
  const auto reps = static_cast<std::size_t>(cfg.replicas);
  std::vector<std::vector<double>> S(points, std::vector<double>(reps));
  std::vector<std::vector<double>> s_avg(points, std::vector<double>(reps));
  std::vector<SwapReport> reports(reps);

  parallel_replicas(cfg.replicas, cfg.threads, [&](int rep) {
    Rng gen_rng = Rng::stream(cfg.seed, rng_tag::kGenerate, static_cast<std::uint64_t>(rep));
    Graph g = generate(gen, gen_rng);
    if (strategy && !strategy->empty()) {
      Rng swap_rng = Rng::stream(cfg.seed, rng_tag::kSwap, static_cast<std::uint64_t>(rep));
      reports[static_cast<std::size_t>(rep)] = apply_qswaps(g, *strategy, swap_rng);
    }
    const auto n = static_cast<double>(g.vertex_count());
    for (std::size_t gi = 0; gi < points; ++gi) {
      const double phi1 = cfg.phi_grid[gi];
      Rng perc_rng = Rng::stream(cfg.seed, rng_tag::kPercolate,
                                 static_cast<std::uint64_t>(rep) * points + gi);
      const ComponentStats stats = bond_percolate(g, phi2_of_phi1(phi1), phi1, perc_rng);
      S[gi][static_cast<std::size_t>(rep)] = static_cast<double>(stats.giant) / n;
      s_avg[gi][static_cast<std::size_t>(rep)] = avg_finite_size_auto(stats);
    }
  });

  SweepResult out;
  out.rows.resize(points);
  double best_savg = -1.0;
  for (std::size_t gi = 0; gi < points; ++gi) {
    ScanRow& row = out.rows[gi];
    row.x = cfg.phi_grid[gi];
    const MeanErr ms = mean_and_stderr(S[gi]);
    const MeanErr ma = mean_and_stderr(s_avg[gi]);
    row.S = ms.mean;
    row.S_err = ms.err;
    row.s_avg = ma.mean;
    row.s_avg_err = ma.err;
    if (ma.mean > best_savg) {
      best_savg = ma.mean;
      out.threshold_peak = row.x;
    }
    if (out.threshold_onset < 0.0 && ms.mean > 2e-3) out.threshold_onset = row.x;
  }
  for (const auto& report : reports) {
    for (const auto& [q, c] : report.eligible) out.swap_eligible[q] += c;
    for (const auto& [q, c] : report.performed) out.swap_performed[q] += c;
  }
  return out;
}

namespace {

// Per-source cumulative ball profile: profile[l] = |ball(v, l)| until the
// component is exhausted (the last entry is the component size).
void ball_profile_unbounded(const Graph& g, Vertex source, BfsScratch& scratch,
                            std::vector<std::int64_t>& profile,
                            std::vector<std::int64_t>* histogram) {
  profile.clear();
  scratch.resize(g.vertex_count());
  const std::uint32_t stamp = ++scratch.stamp_;
  if (stamp == 0) {
    std::fill(scratch.mark_.begin(), scratch.mark_.end(), 0);
    scratch.stamp_ = 1;
  }
  auto& queue = scratch.queue_;
  queue.clear();
  queue.push_back(source);
  scratch.mark_[static_cast<std::size_t>(source)] = scratch.stamp_;
  profile.push_back(1);
  std::size_t begin = 0;
  std::int64_t distance = 0;
  while (begin < queue.size()) {
    const std::size_t end = queue.size();
    ++distance;
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& a : g.neighbors(queue[i])) {
        auto& mark = scratch.mark_[static_cast<std::size_t>(a.to)];
        if (mark != scratch.stamp_) {
          mark = scratch.stamp_;
          queue.push_back(a.to);
        }
      }
    }
    const auto layer = static_cast<std::int64_t>(queue.size() - end);
    if (layer == 0) break;
    profile.push_back(profile.back() + layer);
    if (histogram) {
      if (static_cast<std::size_t>(distance) >= histogram->size())
        histogram->resize(static_cast<std::size_t>(distance) + 1, 0);
      (*histogram)[static_cast<std::size_t>(distance)] += layer;
    }
    begin = end;
  }
}

std::int64_t profile_at(const std::vector<std::int64_t>& profile, std::int64_t l) {
  if (l < 0 || static_cast<std::size_t>(l) >= profile.size()) return profile.back();
  return profile[static_cast<std::size_t>(l)];
}

}  // namespace

SweepResult limited_component_scan(const Graph& g, const std::vector<std::int64_t>& l_values,
                                   std::int64_t source_sample, Rng& rng) {
  const std::vector<Vertex> sources = sample_vertices(g.vertex_count(), source_sample, rng);
  if (sources.empty()) throw EmptyPoolError("limited_component_scan: no sources");
  const auto n = static_cast<double>(g.vertex_count());

  SweepResult out;
  std::vector<std::vector<double>> values(l_values.size());
  for (auto& v : values) v.reserve(sources.size());

  BfsScratch scratch;
  std::vector<std::int64_t> profile;
  for (const Vertex s : sources) {
    ball_profile_unbounded(g, s, scratch, profile, &out.histogram);
    for (std::size_t i = 0; i < l_values.size(); ++i)
      values[i].push_back(static_cast<double>(profile_at(profile, l_values[i])) / n);
  }

  out.rows.resize(l_values.size());
  for (std::size_t i = 0; i < l_values.size(); ++i) {
    ScanRow& row = out.rows[i];
    row.l = l_values[i];
    const MeanErr me = mean_and_stderr(values[i]);
    row.sl_over_n = me.mean;
    row.sl_err = me.err;
  }
  out.l_av = mean_path_length(out.histogram);
  return out;
}

SweepResult fidelity_scan(const Graph& g, const std::vector<double>& f_grid, double f_min,
                          std::int64_t source_sample, Rng& rng) {
  if (f_grid.empty()) throw DomainError("fidelity_scan requires an F grid");
  if (!std::is_sorted(f_grid.begin(), f_grid.end()))
    throw DomainError("F grid must be ascending");
  for (const double F : f_grid)
    if (!(F > 0.5 && F <= 1.0)) throw DomainError("fidelity grid must lie in (1/2, 1]");
  if (!(f_min > 0.5 && f_min < 1.0)) throw DomainError("f_min must be in (1/2, 1)");

  const std::vector<Vertex> sources = sample_vertices(g.vertex_count(), source_sample, rng);
  if (sources.empty()) throw EmptyPoolError("fidelity_scan: no sources");
  const auto n = static_cast<double>(g.vertex_count());

  // One BFS per source; every F reads its l off the cached profiles.
  SweepResult out;
  std::vector<std::vector<std::int64_t>> profiles(sources.size());
  BfsScratch scratch;
  for (std::size_t i = 0; i < sources.size(); ++i)
    ball_profile_unbounded(g, sources[i], scratch, profiles[i], &out.histogram);

  out.rows.resize(f_grid.size());
  std::vector<double> values;
  for (std::size_t fi = 0; fi < f_grid.size(); ++fi) {
    const double F = f_grid[fi];
    const double alpha = alpha_of_F(F);
    const auto limit = alpha == 1.0 ? std::optional<long long>() : max_path_length(f_min, alpha);
    values.clear();
    for (const auto& profile : profiles)
      values.push_back(static_cast<double>(profile_at(profile, limit ? *limit : -1)) / n);
    ScanRow& row = out.rows[fi];
    row.x = F;
    row.l = limit ? *limit : -1;
    const MeanErr me = mean_and_stderr(values);
    row.sl_over_n = me.mean;
    row.sl_err = me.err;
  }
  out.l_av = mean_path_length(out.histogram);
  return out;
}

SweepResult combine_replicas(const std::vector<SweepResult>& per_replica, int bootstrap_resamples,
                             std::uint64_t seed) {
  if (per_replica.empty()) throw DomainError("combine_replicas requires at least one replica");
  SweepResult out = per_replica.front();
  const std::size_t rows = out.rows.size();
  Rng boot_rng = Rng::stream(seed, rng_tag::kBootstrap, 0);
  std::vector<double> means;
  for (std::size_t i = 0; i < rows; ++i) {
    means.clear();
    for (const auto& rep : per_replica) {
      if (rep.rows.size() != rows) throw DomainError("combine_replicas: row mismatch");
      means.push_back(rep.rows[i].sl_over_n);
    }
    const MeanErr plain = mean_and_stderr(means);
    out.rows[i].sl_over_n = plain.mean;
    out.rows[i].sl_err = per_replica.size() >= 2
                             ? bootstrap_stderr(means, bootstrap_resamples, boot_rng)
                             : out.rows[i].sl_err;
  }
  // Pool histograms and recompute the mean path length.
  std::vector<std::int64_t> histogram;
  for (const auto& rep : per_replica) {
    if (rep.histogram.size() > histogram.size()) histogram.resize(rep.histogram.size(), 0);
    for (std::size_t l = 0; l < rep.histogram.size(); ++l) histogram[l] += rep.histogram[l];
  }
  out.histogram = std::move(histogram);
  out.l_av = mean_path_length(out.histogram);
  return out;
}

}  // namespace qperc

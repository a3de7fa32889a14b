#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qnbm/distributions.hpp"
#include "qnbm/network.hpp"

namespace qnbm {

enum class LossMode { exact, sampled };
enum class OptimizerKind { adam, gd };

struct TrainConfig {
    NetworkTopology topology;
    DiscreteDistribution target;
    std::size_t iterations = 2000;
    std::size_t shots_per_iteration = 10000;  // pre-post-selection, sampled mode only
    LossMode loss_mode = LossMode::exact;
    OptimizerKind optimizer = OptimizerKind::adam;
    double learning_rate = 0.05;
    std::optional<double> fd_step;  // defaults to 1e-3 exact / 0.05 sampled
    double epsilon = 1e-16;         // model-probability floor inside the KL
    std::uint64_t seed = 1;
    bool clamp_params = true;
    double init_scale = 0.1;  // parameters start uniform in (-init_scale, init_scale)

    double resolved_fd_step() const;
    void validate() const;
};

struct TrainRecord {
    std::vector<double> kl_history;  // loss at the parameters entering each iteration
    Parameters final_params;
    double final_kl = 0.0;  // evaluated after the last update
    std::uint64_t seed = 0;
};

//! Table-style aggregate over per-trial final KLs: min / max / mean and the
//! population standard deviation (divide by n).
struct TrialStats {
    double min_kl = 0.0;
    double max_kl = 0.0;
    double mean_kl = 0.0;
    double std_kl = 0.0;
    std::vector<double> final_kls;
};

struct TrialsResult {
    std::vector<TrainRecord> records;
    TrialStats stats;
};

//! sum_x P_t(x) log(P_t(x) / max(P_m(x), epsilon)); zero-target terms drop.
double kl_divergence(const DiscreteDistribution& target, const DiscreteDistribution& model,
                     double epsilon);

//! Exact mode: KL against forward_exact's output distribution (sample_seed
//! ignored). Sampled mode: KL against the empirical accepted-shot
//! distribution at config.shots_per_iteration shots drawn with sample_seed.
double loss(const Parameters& params, const TrainConfig& config, std::uint64_t sample_seed = 0);

//! Central differences, one parameter at a time: (L(p+h) - L(p-h)) / 2h in
//! flatten() order. Probes do not re-clamp. Sampled mode evaluates the +h and
//! -h losses on a common substream (seed derived from config.seed, iteration,
//! parameter index) so the shot noise cancels.
std::vector<double> fd_gradient(const Parameters& params, const TrainConfig& config,
                                std::uint64_t iteration = 0);

TrainRecord train(const TrainConfig& config);

//! Trials at seeds config.seed, config.seed + 1, ...; runs in parallel, one
//! trial per worker. num_trials >= 2.
TrialsResult run_trials(const TrainConfig& config, std::size_t num_trials);

TrialStats compute_trial_stats(const std::vector<double>& final_kls);

}  // namespace qnbm

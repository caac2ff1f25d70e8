#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace srs {

// One measurement run: `shots` repetitions with the laser on and the same
// number with it off. A "dark" outcome with the laser on occurs with
// probability 1 - (1 - p_bg) exp(-Gamma tau); with it off, p_bg.
struct ExperimentConfig {
    long shots = 0;
    double exposure_time = 0.0;    // tau_l, s
    double true_rate = 0.0;        // s^-1
    double background_prob = 0.0;  // per shot
    std::uint64_t rng_seed = 0;
};

struct RunCounts {
    long dark_on = 0;
    long dark_off = 0;
};

RunCounts simulate_run(const ExperimentConfig& config);

// P_meas = p_on - p_off, clamped at zero. `underflowed` flags the clamp.
struct CorrectedProbability {
    double value = 0.0;
    bool underflowed = false;
};
CorrectedProbability background_correct(double p_on, double p_off);

// Gamma_meas = -ln(1 - P_meas) / tau_l
double extract_rate(double p_meas, double tau_l);

// Wilson score interval for k successes in n trials at normal quantile z.
std::pair<double, double> wilson_interval(long k, long n, double z);

struct FitPoint {
    double x = 0.0;
    double sigma_x = 0.0;
    double y = 0.0;
    double sigma_y = 0.0;
};

struct FitResult {
    double slope = 0.0;
    double sigma_slope = 0.0;
    double intercept = 0.0;
    double sigma_intercept = 0.0;
    bool has_intercept = false;
    int iterations = 0;
    double objective = 0.0;  // chi^2 at the minimum
};

// Orthogonal distance regression of y = (a +) b x with uncertainties on both
// axes: minimizes sum_i [ (y_i - a - b x_i*)^2/sy_i^2 + (x_i - x_i*)^2/sx_i^2 ]
// over b (and a if with_intercept) and the latent x_i*. Deterministic;
// slope uncertainty from the curvature of the profiled objective.
FitResult odr_fit(const std::vector<FitPoint>& points, bool with_intercept);

// Profiled ODR objective at a given slope (latent points eliminated in
// closed form). Exposed for the monotone-solver-trace test.
double odr_objective(const std::vector<FitPoint>& points, double slope, bool with_intercept);

// Synthetic rate-vs-shift dataset: for each x value, draw counts for the
// full sequence at true rate slope*x, correct, extract, and attach Wilson
// standard errors.  x is reported with Gaussian noise sigma_x = sigma_x_rel*x.
struct DatasetConfig {
    double slope = 0.0;          // s^-1 per rad/s
    std::vector<double> x_values;  // rad/s
    double sigma_x_rel = 0.01;
    long shots = 50000;
    double exposure_time = 0.0;  // s
    double background_prob = 0.0;
    std::uint64_t rng_seed = 0;
};
std::vector<FitPoint> simulate_dataset(const DatasetConfig& config);

} // namespace srs

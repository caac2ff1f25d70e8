#include "srs/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "srs/errors.hpp"

namespace srs {

namespace {

// 53-bit uniform in [0,1); avoids std::bernoulli_distribution so that
// seeded streams are identical across standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
    // Box-Muller; one draw discarded for determinism-friendly simplicity
    double u1 = uniform01(rng);
    while (u1 == 0.0) u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
}

} // namespace

RunCounts simulate_run(const ExperimentConfig& config) {
    if (config.shots < 1) throw ValidationError("shots must be >= 1");
    if (!(config.exposure_time > 0.0)) throw ValidationError("exposure time must be > 0");
    if (config.background_prob < 0.0 || config.background_prob > 1.0)
        throw ValidationError("background probability must be in [0,1]");
    if (config.true_rate < 0.0) throw ValidationError("rate must be >= 0");

    const double p_on =
        1.0 - (1.0 - config.background_prob) * std::exp(-config.true_rate * config.exposure_time);
    const double p_off = config.background_prob;

    std::mt19937_64 rng(config.rng_seed);
    RunCounts counts;
    for (long i = 0; i < config.shots; ++i)
        if (uniform01(rng) < p_on) ++counts.dark_on;
    for (long i = 0; i < config.shots; ++i)
        if (uniform01(rng) < p_off) ++counts.dark_off;
    return counts;
}

CorrectedProbability background_correct(double p_on, double p_off) {
    if (p_on < 0.0 || p_on > 1.0 || p_off < 0.0 || p_off > 1.0)
        throw ValidationError("probabilities must be in [0,1]");
    const double d = p_on - p_off;
    if (d < 0.0) return {0.0, true};
    return {d, false};
}

double extract_rate(double p_meas, double tau_l) {
    if (!(tau_l > 0.0)) throw ValidationError("exposure time must be > 0");
    if (p_meas < 0.0 || p_meas >= 1.0) throw ValidationError("P_meas must be in [0,1)");
    return -std::log1p(-p_meas) / tau_l;
}

std::pair<double, double> wilson_interval(long k, long n, double z) {
    if (n < 1 || k < 0 || k > n) throw ValidationError("need 0 <= k <= n, n >= 1");
    if (!(z > 0.0)) throw ValidationError("z must be > 0");
    const double nf = static_cast<double>(n);
    const double kf = static_cast<double>(k);
    const double z2 = z * z;
    const double center = (kf + z2 / 2.0) / (nf + z2);
    const double radius =
        z / (nf + z2) * std::sqrt(kf * (nf - kf) / nf + z2 / 4.0);
    return {std::max(0.0, center - radius), std::min(1.0, center + radius)};
}

double odr_objective(const std::vector<FitPoint>& points, double slope, bool with_intercept) {
    // For fixed slope the latent x_i* are eliminated exactly, leaving
    //   chi^2(a,b) = sum (y_i - a - b x_i)^2 / (sy_i^2 + b^2 sx_i^2),
    // and the optimal intercept is the weighted mean of (y_i - b x_i).
    double a = 0.0;
    if (with_intercept) {
        double sw = 0.0, swr = 0.0;
        for (const auto& p : points) {
            const double w = 1.0 / (p.sigma_y * p.sigma_y + slope * slope * p.sigma_x * p.sigma_x);
            sw += w;
            swr += w * (p.y - slope * p.x);
        }
        a = swr / sw;
    }
    double chi2 = 0.0;
    for (const auto& p : points) {
        const double denom = p.sigma_y * p.sigma_y + slope * slope * p.sigma_x * p.sigma_x;
        const double r = p.y - a - slope * p.x;
        chi2 += r * r / denom;
    }
    return chi2;
}

FitResult odr_fit(const std::vector<FitPoint>& points, bool with_intercept) {
    const size_t min_points = with_intercept ? 2 : 1;
    if (points.size() < min_points) throw ValidationError("too few points for the fit");
    for (const auto& p : points)
        if (!(p.sigma_x > 0.0) || !(p.sigma_y > 0.0))
            throw ValidationError("all sigmas must be > 0");
    const auto [xmin, xmax] = std::minmax_element(
        points.begin(), points.end(), [](const FitPoint& a, const FitPoint& b) { return a.x < b.x; });
    if (xmin->x == xmax->x) throw ValidationError("degenerate geometry: all x identical");

    // starting guess: weighted least squares ignoring sigma_x
    double sxx = 0.0, sxy = 0.0;
    for (const auto& p : points) {
        const double w = 1.0 / (p.sigma_y * p.sigma_y);
        sxx += w * p.x * p.x;
        sxy += w * p.x * p.y;
    }
    double b0 = sxx > 0.0 ? sxy / sxx : 0.0;

    auto f = [&](double b) { return odr_objective(points, b, with_intercept); };

    // bracket the minimum around b0, then golden-section
    const double step0 = std::max(std::abs(b0) * 0.5, 1e-12);
    double lo = b0 - step0, hi = b0 + step0;
    int iters = 0;
    const int max_iters = 200;
    while (iters < max_iters) {
        ++iters;
        const bool grow_lo = f(lo) < f(b0);
        const bool grow_hi = f(hi) < f(b0);
        if (!grow_lo && !grow_hi) break;
        const double span = hi - lo;
        if (grow_lo) lo -= span;
        if (grow_hi) hi += span;
    }

    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = hi - gr * (hi - lo);
    double c2 = lo + gr * (hi - lo);
    double f1 = f(c1), f2 = f(c2);
    double prev_best = std::min(f1, f2);
    while (iters < max_iters) {
        ++iters;
        if (f1 < f2) {
            hi = c2; c2 = c1; f2 = f1;
            c1 = hi - gr * (hi - lo);
            f1 = f(c1);
        } else {
            lo = c1; c1 = c2; f1 = f2;
            c2 = lo + gr * (hi - lo);
            f2 = f(c2);
        }
        const double best = std::min(f1, f2);
        const double scale = std::max({std::abs(prev_best), std::abs(best), 1e-300});
        if (hi - lo < 1e-14 * std::max(std::abs(lo), std::abs(hi)) ||
            std::abs(prev_best - best) < 1e-12 * scale)
            break;
        prev_best = best;
    }
    if (iters >= max_iters) throw ConvergenceError("ODR did not converge in 200 iterations");

    FitResult res;
    res.slope = 0.5 * (lo + hi);
    res.has_intercept = with_intercept;
    res.iterations = iters;
    res.objective = f(res.slope);

    if (with_intercept) {
        double sw = 0.0, swr = 0.0;
        for (const auto& p : points) {
            const double w = 1.0 / (p.sigma_y * p.sigma_y +
                                    res.slope * res.slope * p.sigma_x * p.sigma_x);
            sw += w;
            swr += w * (p.y - res.slope * p.x);
        }
        res.intercept = swr / sw;
        res.sigma_intercept = std::sqrt(1.0 / sw);
    }

    // slope error from the curvature of the profiled chi^2
    const double h = std::max(std::abs(res.slope), 1e-6) * 1e-4;
    const double d2 = (f(res.slope + h) - 2.0 * res.objective + f(res.slope - h)) / (h * h);
    res.sigma_slope = d2 > 0.0 ? std::sqrt(2.0 / d2) : 0.0;
    return res;
}

std::vector<FitPoint> simulate_dataset(const DatasetConfig& config) {
    if (config.x_values.empty()) throw ValidationError("dataset needs at least one x value");
    std::mt19937_64 rng(config.rng_seed);
    std::vector<FitPoint> out;
    out.reserve(config.x_values.size());
    const double z = 1.0;  // one-sigma Wilson half-width as the standard error
    for (size_t i = 0; i < config.x_values.size(); ++i) {
        const double x_true = config.x_values[i];
        ExperimentConfig run;
        run.shots = config.shots;
        run.exposure_time = config.exposure_time;
        run.true_rate = config.slope * x_true;
        run.background_prob = config.background_prob;
        run.rng_seed = rng();  // per-point stream
        const RunCounts counts = simulate_run(run);

        const double n = static_cast<double>(run.shots);
        const double p_on = counts.dark_on / n;
        const double p_off = counts.dark_off / n;
        const auto corrected = background_correct(p_on, p_off);
        const double rate = extract_rate(corrected.value, run.exposure_time);

        const auto [lo_on, hi_on] = wilson_interval(counts.dark_on, run.shots, z);
        const auto [lo_off, hi_off] = wilson_interval(counts.dark_off, run.shots, z);
        const double s_on = 0.5 * (hi_on - lo_on);
        const double s_off = 0.5 * (hi_off - lo_off);
        const double s_p = std::sqrt(s_on * s_on + s_off * s_off);
        const double s_rate = s_p / ((1.0 - corrected.value) * run.exposure_time);

        const double s_x = config.sigma_x_rel * std::abs(x_true);
        const double x_obs = x_true + s_x * gaussian(rng);
        out.push_back({x_obs, std::max(s_x, 1e-300), rate, std::max(s_rate, 1e-300)});
    }
    return out;
}

} // namespace srs

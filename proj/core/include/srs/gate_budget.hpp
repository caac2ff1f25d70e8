#pragma once

#include <vector>

#include "srs/ion_model.hpp"
#include "srs/scattering.hpp"

namespace srs {

enum class BeamConfigKind { one_qubit_two_beam, two_qubit_three_beam, two_qubit_four_beam };
enum class BeamGeometry { counter_propagating };

// Beam configuration for a stimulated-Raman gate. The three-beam two-qubit
// configuration uses two beams of intensity I in one direction and one of 2I
// in the other, which raises the pair Rabi rate by sqrt(2) over four
// balanced beams and puts the mean beam intensity at 4I/3.
struct GateConfig {
    BeamConfigKind kind = BeamConfigKind::two_qubit_three_beam;
    int loop_count = 1;            // K
    double mode_omega = 0.0;       // motional mode angular frequency, rad/s
    BeamGeometry geometry = BeamGeometry::counter_propagating;
    double ion_mass = 0.0;         // kg

    static GateConfig make(BeamConfigKind kind, int K, double mode_omega, double ion_mass);
    // scattering-rate multiplier: mean beam intensity over the pair intensity
    double gamma_tilde_factor() const;
    // Rabi multiplier relative to a balanced pair at the pair intensity
    double rabi_prime_factor() const;
};

struct ErrorBudget {
    double epsilon_1q = 0.0;
    double epsilon_2q = 0.0;
    double gate_time = 0.0;           // s
    double scattering_rate_used = 0.0; // s^-1
    ScatterModel model{};
};

// eta = Delta_k sqrt(hbar / (2 m mode_omega)), Delta_k = 2 w_l / c for
// counter-propagating beams.
double lamb_dicke(const GateConfig& config, double omega_l);

// eps_1q = pi Gamma / |Omega_R|  (pi pulse, two beams)
double one_qubit_error(double rate, double rabi);

// eps_2q = 3 pi sqrt(K) Gamma_tilde / (eta |Omega_R'|)
double two_qubit_error(double rate_avg, double rabi_prime, const GateConfig& config,
                       double omega_l);

// The exact exponential form 1 - exp(-2 * 3 tau_2q Gamma_tilde) behind the
// linearized expression above; their difference is O(eps^2).
double two_qubit_error_exact(double rate_avg, double rabi_prime, const GateConfig& config,
                             double omega_l);

struct GateErrorRow {
    double omega_l = 0.0;
    double lambda_nm = 0.0;
    ScatterModel model{};
    double eta = 0.0;
    double epsilon_2q = 0.0;
};

// Two-qubit error versus laser frequency for the CDA and w3 models. Rates
// use the Raman (SRS) part only. Every row is checked to be independent of
// the overall intensity.
std::vector<GateErrorRow> error_sweep(const IonModel& ion, const GateConfig& config,
                                      double omega_lo, double omega_hi, int grid_size,
                                      double guard_band = kDefaultGuardBand);

// Limit of the CDA two-qubit error far red-detuned of both P manifolds,
// evaluated analytically from the Delta -> inf limit of the rate/Rabi ratio.
// The Lamb-Dicke parameter is taken at the g <-> e' transition frequency,
// the reference wavelength of the constant-density-of-states picture.
double cda_asymptote(const IonModel& ion, const GateConfig& config);

// Chains a measured rate-vs-Stark-shift slope (s^-1 per rad/s) with the
// computed o-type Stark shift and the configuration Rabi rate to an
// empirical two-qubit error:  eps = 3 pi sqrt(K) (Gamma/delta) (delta/Omega') / eta.
double infer_error_from_slope(const IonModel& ion, double slope_gamma_delta,
                              double omega_l, const GateConfig& config,
                              double guard_band = kDefaultGuardBand);

} // namespace srs

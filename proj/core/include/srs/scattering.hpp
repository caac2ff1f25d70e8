#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "srs/constants.hpp"
#include "srs/ion_model.hpp"
#include "srs/states.hpp"

namespace srs {

// Default guard band around the P resonances: 2 pi x 10 GHz. Second-order
// perturbation theory is refused closer to resonance than this.
inline constexpr double kDefaultGuardBand = 2.0 * constants::pi * 10.0e9;

// Monochromatic laser field E(t) = (E0/2)(eps e^{-iwt} + c.c.) with the
// polarization given by its spherical components (eps_-1, eps_0, eps_+1).
struct LaserField {
    double omega = 0.0;      // rad/s
    double intensity = 0.0;  // W/m^2, time-averaged
    std::array<std::complex<double>, 3> pol{};  // indexed q+1

    // field amplitude E0 = sqrt(2 I / (eps0 c))
    double field_amplitude() const;
    const std::complex<double>& eps(int q) const { return pol[static_cast<size_t>(q + 1)]; }

    static LaserField make(double omega, double intensity,
                           std::array<std::complex<double>, 3> pol);
    static LaserField sigma_plus(double omega, double intensity);
    static LaserField sigma_minus(double omega, double intensity);
    static LaserField pi_pol(double omega, double intensity);
};

enum class ScatterModel { CDA, W3, PT };
std::string to_string(ScatterModel m);

// Per-final-manifold scattering rates with the total/Rayleigh/Raman split.
// raman = total - rayleigh; eta_D52 = rate(g'')/raman.
struct ScatterBreakdown {
    ScatterModel model{};
    double rate_S = 0.0;    // final manifold g (includes the elastic piece)
    double rate_D32 = 0.0;  // final manifold g'
    double rate_D52 = 0.0;  // final manifold g''
    double total = 0.0;
    double rayleigh = 0.0;
    double raman = 0.0;
    double eta_D52 = 0.0;

    double per_manifold(ManifoldLabel m) const;
};

// Kramers-Heisenberg rate |i> -> |f| for one final state, summing the
// second-order amplitude over every sublevel of both P manifolds:
//   Gamma = (E0^2/4 hbar^2) (w_sc^3 Theta(w_sc) / (3 pi eps0 hbar c^3))
//           * sum_q | sum_k <f|d_q|k><k|d_l|i> / (w_ik - w_l) |^2
double pt_rate(const IonModel& ion, const LaserField& laser,
               const AtomState& initial, const AtomState& final_state,
               double guard_band = kDefaultGuardBand);

// pt_rate summed over all final sublevels of g, g', g''. Rayleigh is the
// elastic i -> i term only; scattering into other sublevels of the initial
// manifold counts as Raman.
ScatterBreakdown pt_breakdown(const IonModel& ion, const LaserField& laser,
                              const AtomState& initial,
                              double guard_band = kDefaultGuardBand);

// Closed forms for a g-type clock-state qubit, constant density of states.
// g_coupling is the sigma+ stretch-transition half-Rabi frequency (rad/s).
ScatterBreakdown cda_rates(const IonModel& ion, double g_coupling, double omega_l,
                           double guard_band = kDefaultGuardBand);

// Closed forms with the (w_sc / w_line)^3 density-of-states factors and the
// Heaviside energy-conservation cutoffs per final manifold.
ScatterBreakdown w3_rates(const IonModel& ion, double g_coupling, double omega_l,
                          double guard_band = kDefaultGuardBand);

struct SweepRow {
    double omega_l = 0.0;
    double lambda_nm = 0.0;
    ScatterModel model{};
    ScatterBreakdown breakdown;
};

// Evaluates CDA, w3 and PT (clock state, sigma+) on a uniform frequency grid.
// Grid points inside a guard band are rejected up front.
std::vector<SweepRow> sweep_models(const IonModel& ion, double intensity,
                                   double omega_lo, double omega_hi, int grid_size,
                                   double guard_band = kDefaultGuardBand);

// |g; F=0, mF=0>, the state every closed form refers to.
AtomState clock_state(const IonModel& ion);

} // namespace srs

#include "srs/gate_budget.hpp"

#include <cmath>

#include "srs/errors.hpp"
#include "srs/light_shift.hpp"
#include "srs/units.hpp"

namespace srs {

namespace {

using constants::c;
using constants::hbar;
using constants::pi;

// Raman (SRS) rate per unit intensity for one model at one frequency.
double raman_slope(const IonModel& ion, ScatterModel model, double omega_l,
                   double guard_band) {
    const double mu = stretch_dipole(ion);
    const double e0 = std::sqrt(2.0 / (constants::eps0 * c));  // E0 at I = 1
    const double g1 = e0 * mu / (2.0 * hbar);
    switch (model) {
        case ScatterModel::CDA: return cda_rates(ion, g1, omega_l, guard_band).raman;
        case ScatterModel::W3: return w3_rates(ion, g1, omega_l, guard_band).raman;
        case ScatterModel::PT:
            return pt_breakdown(ion, LaserField::sigma_plus(omega_l, 1.0), clock_state(ion),
                                guard_band).raman;
    }
    throw ValidationError("unknown scatter model");
}

// Carrier Rabi rate of the gate drive per unit pair intensity. The two-qubit
// drive is bichromatic: each beam splits its power between a red and a blue
// tone, so each stimulated-Raman tone pair runs at the per-tone amplitudes
// and its Rabi rate is half the monochromatic sigma+ pair value.
double gate_rabi_slope(const IonModel& ion, double omega_l, double guard_band) {
    const auto pair = QubitPair::g_type_pair(ion);
    const auto b = LaserField::sigma_plus(omega_l, 1.0);
    return 0.5 * two_photon_rabi(ion, b, b, pair, guard_band);
}

} // namespace

GateConfig GateConfig::make(BeamConfigKind kind, int K, double mode_omega, double ion_mass) {
    if (K < 1) throw ValidationError("loop count K must be >= 1");
    if (!(mode_omega > 0.0)) throw ValidationError("mode frequency must be > 0");
    if (!(ion_mass > 0.0)) throw ValidationError("ion mass must be > 0");
    return GateConfig{kind, K, mode_omega, BeamGeometry::counter_propagating, ion_mass};
}

double GateConfig::gamma_tilde_factor() const {
    return kind == BeamConfigKind::two_qubit_three_beam ? 4.0 / 3.0 : 1.0;
}

double GateConfig::rabi_prime_factor() const {
    return kind == BeamConfigKind::two_qubit_three_beam ? std::sqrt(2.0) : 1.0;
}

double lamb_dicke(const GateConfig& config, double omega_l) {
    const double dk = 2.0 * omega_l / c;
    return dk * std::sqrt(hbar / (2.0 * config.ion_mass * config.mode_omega));
}

double one_qubit_error(double rate, double rabi) {
    if (!(rabi > 0.0)) throw ValidationError("Rabi frequency must be > 0");
    return pi * rate / rabi;
}

double two_qubit_error(double rate_avg, double rabi_prime, const GateConfig& config,
                       double omega_l) {
    if (!(rabi_prime > 0.0)) throw ValidationError("Rabi frequency must be > 0");
    const double eta = lamb_dicke(config, omega_l);
    if (!(eta > 0.0)) throw ValidationError("Lamb-Dicke parameter must be > 0");
    return 3.0 * pi * std::sqrt(static_cast<double>(config.loop_count)) * rate_avg /
           (eta * rabi_prime);
}

double two_qubit_error_exact(double rate_avg, double rabi_prime, const GateConfig& config,
                             double omega_l) {
    if (!(rabi_prime > 0.0)) throw ValidationError("Rabi frequency must be > 0");
    const double eta = lamb_dicke(config, omega_l);
    const double tau_2q =
        pi * std::sqrt(static_cast<double>(config.loop_count)) / (2.0 * eta * rabi_prime);
    return 1.0 - std::exp(-2.0 * 3.0 * tau_2q * rate_avg);
}

std::vector<GateErrorRow> error_sweep(const IonModel& ion, const GateConfig& config,
                                      double omega_lo, double omega_hi, int grid_size,
                                      double guard_band) {
    if (grid_size < 1) throw ValidationError("grid size must be >= 1");
    if (!(omega_lo > 0.0) || !(omega_hi >= omega_lo))
        throw ValidationError("invalid frequency range");

    std::vector<GateErrorRow> rows;
    rows.reserve(static_cast<size_t>(grid_size) * 2);
    for (int i = 0; i < grid_size; ++i) {
        const double w = grid_size == 1
                             ? omega_lo
                             : omega_lo + (omega_hi - omega_lo) * i / (grid_size - 1);
        const double eta = lamb_dicke(config, w);
        const double om = gate_rabi_slope(ion, w, guard_band);
        for (auto model : {ScatterModel::CDA, ScatterModel::W3}) {
            const double gm = raman_slope(ion, model, w, guard_band);
            const double eps = two_qubit_error(config.gamma_tilde_factor() * gm,
                                               config.rabi_prime_factor() * om, config, w);
            // the rate/Rabi ratio must not depend on the overall intensity
            const double eps4 = two_qubit_error(config.gamma_tilde_factor() * gm * 4.0,
                                                config.rabi_prime_factor() * om * 4.0, config, w);
            if (std::abs(eps4 / eps - 1.0) > 1e-9)
                throw ConvergenceError("two-qubit error not intensity-independent");
            rows.push_back({w, omega_to_wavelength(w) * 1e9, model, eta, eps});
        }
    }
    return rows;
}

double cda_asymptote(const IonModel& ion, const GateConfig& config) {
    const double A_eg = ion.line(ManifoldLabel::e, ManifoldLabel::g)->einstein_A;
    const double A_egp = ion.line(ManifoldLabel::e, ManifoldLabel::gp)->einstein_A;
    const double A_epg = ion.line(ManifoldLabel::ep, ManifoldLabel::g)->einstein_A;
    const double A_epgp = ion.line(ManifoldLabel::ep, ManifoldLabel::gp)->einstein_A;
    const double A_epgpp = ion.line(ManifoldLabel::ep, ManifoldLabel::gpp)->einstein_A;

    // Delta -> -inf limits: Gamma_Raman,CDA -> (g^2/3) W_inf / Delta^2 and the
    // gate carrier Rabi -> (g^2/6) w_FS / Delta^2, so Gamma/Omega -> 2 W_inf / w_FS.
    const double w_inf = A_eg + A_egp - A_epg + 2.0 * (A_epgp + A_epgpp);
    const double ratio = 2.0 * w_inf / ion.fine_structure_splitting();

    const double eta = lamb_dicke(config, ion.energy(ManifoldLabel::ep));
    return 3.0 * pi * std::sqrt(static_cast<double>(config.loop_count)) *
           (config.gamma_tilde_factor() / config.rabi_prime_factor()) * ratio / eta;
}

double infer_error_from_slope(const IonModel& ion, double slope_gamma_delta,
                              double omega_l, const GateConfig& config, double guard_band) {
    const auto o_pair = QubitPair::o_type_pair(ion);
    const auto beam = LaserField::sigma_plus(omega_l, 1.0);
    const double delta_per_I = std::abs(differential_stark(ion, beam, o_pair, guard_band));
    if (delta_per_I < 1e-30)
        throw ValidationError("o-type pair has no Stark sensitivity at this wavelength");
    const double rabi_per_I = config.rabi_prime_factor() * gate_rabi_slope(ion, omega_l, guard_band);
    const double eta = lamb_dicke(config, omega_l);
    return 3.0 * pi * std::sqrt(static_cast<double>(config.loop_count)) * slope_gamma_delta *
           delta_per_I / (rabi_per_I * eta);
}

} // namespace srs

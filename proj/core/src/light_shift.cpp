#include "srs/light_shift.hpp"

#include <cmath>

#include "srs/errors.hpp"

namespace srs {

namespace {

using constants::c;
using constants::eps0;
using constants::hbar;

void check_guard_state(const IonModel& ion, double omega_l, ManifoldLabel m, double guard_band) {
    const double wi = ion.energy(m);
    for (auto p : {ManifoldLabel::e, ManifoldLabel::ep}) {
        if (!ion.dipole_connected(p, m)) continue;
        if (std::abs((ion.energy(p) - wi) - omega_l) < guard_band)
            throw ResonanceError("laser within guard band of the " + to_string(p) +
                                 " resonance from manifold " + to_string(m));
    }
}

} // namespace

QubitPair QubitPair::g_type_pair(const IonModel& ion) {
    return {AtomState::make(ion, ManifoldLabel::g, HalfInt::from_twice(0), HalfInt::from_twice(0)),
            AtomState::make(ion, ManifoldLabel::g, HalfInt::from_twice(2), HalfInt::from_twice(0)),
            QubitKind::g_type};
}

QubitPair QubitPair::o_type_pair(const IonModel& ion) {
    return {AtomState::make(ion, ManifoldLabel::g, HalfInt::from_twice(2), HalfInt::from_twice(0)),
            AtomState::make(ion, ManifoldLabel::gpp, HalfInt::from_twice(6), HalfInt::from_twice(0)),
            QubitKind::o_type};
}

double coupling_g(const IonModel& ion, const LaserField& laser) {
    return laser.field_amplitude() * stretch_dipole(ion) / (2.0 * hbar);
}

double ac_stark_shift(const IonModel& ion, const LaserField& laser, const AtomState& state,
                      bool include_counter_rotating, double guard_band) {
    check_guard_state(ion, laser.omega, state.manifold, guard_band);
    if (laser.intensity == 0.0) return 0.0;

    const double E0 = laser.field_amplitude();
    const double ws = ion.energy(state.manifold);

    double sum = 0.0;
    for (auto p : {ManifoldLabel::e, ManifoldLabel::ep}) {
        if (!ion.dipole_connected(p, state.manifold)) continue;
        const double wk = ion.energy(p) - ws;
        const double rot = 1.0 / (wk - laser.omega);
        const double crot = include_counter_rotating ? 1.0 / (wk + laser.omega) : 0.0;
        for (const auto& k : manifold_states(ion, p)) {
            for (int q = -1; q <= 1; ++q) {
                const double wq = std::norm(laser.eps(q));
                if (wq == 0.0) continue;
                const double el = dipole_element(k, q, state, ion);
                if (el == 0.0) continue;
                sum += wq * el * el * (rot + crot);
            }
        }
    }
    return -(E0 * E0) / (4.0 * hbar * hbar) * sum;
}

double differential_stark(const IonModel& ion, const LaserField& laser, const QubitPair& pair,
                          double guard_band) {
    return ac_stark_shift(ion, laser, pair.upper, true, guard_band) -
           ac_stark_shift(ion, laser, pair.lower, true, guard_band);
}

double two_photon_rabi(const IonModel& ion, const LaserField& beam1, const LaserField& beam2,
                       const QubitPair& pair, double guard_band) {
    check_guard_state(ion, beam1.omega, pair.lower.manifold, guard_band);
    check_guard_state(ion, beam2.omega, pair.upper.manifold, guard_band);
    if (beam1.intensity == 0.0 || beam2.intensity == 0.0) return 0.0;

    const double E1 = beam1.field_amplitude();
    const double E2 = beam2.field_amplitude();
    const double w_down = ion.energy(pair.lower.manifold);

    std::complex<double> amp = 0.0;
    for (auto p : {ManifoldLabel::e, ManifoldLabel::ep}) {
        const double denom = (ion.energy(p) - w_down) - beam1.omega;
        for (const auto& k : manifold_states(ion, p)) {
            std::complex<double> absorb = 0.0;
            for (int q = -1; q <= 1; ++q) {
                if (beam1.eps(q) == std::complex<double>(0.0, 0.0)) continue;
                const double el = dipole_element(k, q, pair.lower, ion);
                if (el != 0.0) absorb += beam1.eps(q) * el;
            }
            if (absorb == std::complex<double>(0.0, 0.0)) continue;
            // d . eps2* = sum_q (-1)^q conj(eps2_q) d_{-q}
            std::complex<double> emit = 0.0;
            for (int q = -1; q <= 1; ++q) {
                if (beam2.eps(q) == std::complex<double>(0.0, 0.0)) continue;
                const double el = dipole_element(pair.upper, -q, k, ion);
                if (el != 0.0) emit += (q % 2 == 0 ? 1.0 : -1.0) * std::conj(beam2.eps(q)) * el;
            }
            amp += emit * absorb / denom;
        }
    }
    return std::abs(amp) * E1 * E2 / (4.0 * hbar * hbar);
}

double stark_to_intensity(const IonModel& ion, const LaserField& laser_template,
                          const QubitPair& pair, double delta_measured, double guard_band) {
    LaserField unit = laser_template;
    unit.intensity = 1.0;
    const double sens = differential_stark(ion, unit, pair, guard_band);
    if (std::abs(sens) < 1e-30)
        throw ValidationError("qubit pair has no Stark sensitivity at this wavelength");
    return delta_measured / sens;
}

} // namespace srs

#pragma once

#include "srs/scattering.hpp"
#include "srs/states.hpp"

namespace srs {

enum class QubitKind { g_type, o_type, m_type };

// A qubit pair. g_type: the two mF=0 clock states of the g manifold.
// o_type: |g; F=1, mF=0> <-> |g''; F=3, mF=0| optical qubit.
struct QubitPair {
    AtomState lower;
    AtomState upper;
    QubitKind kind{};

    static QubitPair g_type_pair(const IonModel& ion);
    static QubitPair o_type_pair(const IonModel& ion);
};

// g = E0 mu / (2 hbar), mu the sigma+ stretch element of the g <-> e' line.
// g^2 is proportional to intensity.
double coupling_g(const IonModel& ion, const LaserField& laser);

// Second-order AC Stark shift of a hyperfine state (rad/s):
//   -(E0^2 / 4 hbar^2) sum_{k,q} |eps_q|^2 |<k|d_q|state>|^2
//       [ 1/(w_k - w_s - w_l) + 1/(w_k - w_s + w_l) ]
// Red-detuned light lowers a ground-state energy. The counter-rotating term
// can be dropped for diagnostics via include_counter_rotating.
double ac_stark_shift(const IonModel& ion, const LaserField& laser, const AtomState& state,
                      bool include_counter_rotating = true,
                      double guard_band = kDefaultGuardBand);

// shift(upper) - shift(lower)
double differential_stark(const IonModel& ion, const LaserField& laser, const QubitPair& pair,
                          double guard_band = kDefaultGuardBand);

// Resonant stimulated-Raman Rabi frequency between the pair's states
// (magnitude, rad/s):
//   |E1 E2 / (4 hbar^2) * sum_k <up|d.eps2*|k><k|d.eps1|down> / (w_k - w_down - w_l)|
// Convention: a pi pulse takes t = pi / (2 Omega_R).
double two_photon_rabi(const IonModel& ion, const LaserField& beam1, const LaserField& beam2,
                       const QubitPair& pair, double guard_band = kDefaultGuardBand);

// Inverts the (linear) differential shift: I = delta_measured / (d delta / d I).
// Throws when the pair has no Stark sensitivity at this wavelength.
double stark_to_intensity(const IonModel& ion, const LaserField& laser_template,
                          const QubitPair& pair, double delta_measured,
                          double guard_band = kDefaultGuardBand);

} // namespace srs

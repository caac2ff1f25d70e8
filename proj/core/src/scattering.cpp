#include "srs/scattering.hpp"

#include <cmath>
#include <thread>

#include "srs/errors.hpp"
#include "srs/units.hpp"

namespace srs {

namespace {

using constants::c;
using constants::eps0;
using constants::hbar;
using constants::pi;

constexpr double kKappaDenominator() { return 3.0 * pi * eps0 * hbar * c * c * c; }

void check_guard(const IonModel& ion, double omega_l, ManifoldLabel initial_manifold,
                 double guard_band) {
    const double wi = ion.energy(initial_manifold);
    for (auto p : {ManifoldLabel::e, ManifoldLabel::ep}) {
        const double res = ion.energy(p) - wi;
        if (std::abs(res - omega_l) < guard_band)
            throw ResonanceError("laser within guard band of the " + to_string(p) +
                                 " resonance (" + std::to_string(res) + " rad/s)");
    }
}

double theta_cubed(double w_sc) { return w_sc > 0.0 ? w_sc * w_sc * w_sc : 0.0; }

void finish_breakdown(ScatterBreakdown& b) {
    b.total = b.rate_S + b.rate_D32 + b.rate_D52;
    b.raman = b.total - b.rayleigh;
    b.eta_D52 = b.raman > 0.0 ? b.rate_D52 / b.raman : 0.0;
}

} // namespace

double LaserField::field_amplitude() const {
    return std::sqrt(2.0 * intensity / (eps0 * c));
}

LaserField LaserField::make(double omega, double intensity,
                            std::array<std::complex<double>, 3> pol) {
    if (!(omega > 0.0)) throw ValidationError("laser omega must be > 0");
    if (!(intensity >= 0.0)) throw ValidationError("laser intensity must be >= 0");
    double norm = 0.0;
    for (const auto& e : pol) norm += std::norm(e);
    if (!(norm > 0.0)) throw ValidationError("polarization must be nonzero");
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& e : pol) e *= scale;
    return LaserField{omega, intensity, pol};
}

LaserField LaserField::sigma_plus(double omega, double intensity) {
    return make(omega, intensity, {{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}});
}
LaserField LaserField::sigma_minus(double omega, double intensity) {
    return make(omega, intensity, {{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}});
}
LaserField LaserField::pi_pol(double omega, double intensity) {
    return make(omega, intensity, {{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}});
}

std::string to_string(ScatterModel m) {
    switch (m) {
        case ScatterModel::CDA: return "cda";
        case ScatterModel::W3: return "w3";
        case ScatterModel::PT: return "pt";
    }
    return "?";
}

double ScatterBreakdown::per_manifold(ManifoldLabel m) const {
    switch (m) {
        case ManifoldLabel::g: return rate_S;
        case ManifoldLabel::gp: return rate_D32;
        case ManifoldLabel::gpp: return rate_D52;
        default: throw ValidationError("per_manifold: final manifold must be g, g' or g''");
    }
}

AtomState clock_state(const IonModel& ion) {
    return AtomState::make(ion, ManifoldLabel::g, HalfInt::from_twice(0), HalfInt::from_twice(0));
}

double pt_rate(const IonModel& ion, const LaserField& laser,
               const AtomState& initial, const AtomState& final_state,
               double guard_band) {
    if (initial.manifold == ManifoldLabel::e || initial.manifold == ManifoldLabel::ep)
        throw ValidationError("initial state must be in g, g' or g''");
    if (final_state.manifold == ManifoldLabel::e || final_state.manifold == ManifoldLabel::ep)
        throw ValidationError("final state must be in g, g' or g''");
    check_guard(ion, laser.omega, initial.manifold, guard_band);

    const double w_if = ion.energy(final_state.manifold) - ion.energy(initial.manifold);
    const double w_sc = laser.omega - w_if;
    if (w_sc <= 0.0) return 0.0;
    if (laser.intensity == 0.0) return 0.0;

    const double E0 = laser.field_amplitude();
    const double wi = ion.energy(initial.manifold);

    double sum_q = 0.0;
    for (int q = -1; q <= 1; ++q) {
        std::complex<double> amp = 0.0;
        for (auto p : {ManifoldLabel::e, ManifoldLabel::ep}) {
            const double denom = (ion.energy(p) - wi) - laser.omega;
            for (const auto& k : manifold_states(ion, p)) {
                const double emit = dipole_element(final_state, q, k, ion);
                if (emit == 0.0) continue;
                std::complex<double> absorb = 0.0;
                for (int ql = -1; ql <= 1; ++ql) {
                    if (laser.eps(ql) == std::complex<double>(0.0, 0.0)) continue;
                    const double el = dipole_element(k, ql, initial, ion);
                    if (el != 0.0) absorb += laser.eps(ql) * el;
                }
                amp += emit * absorb / denom;
            }
        }
        sum_q += std::norm(amp);
    }

    const double prefactor = (E0 * E0) / (4.0 * hbar * hbar);
    return prefactor * theta_cubed(w_sc) / kKappaDenominator() * sum_q;
}

ScatterBreakdown pt_breakdown(const IonModel& ion, const LaserField& laser,
                              const AtomState& initial, double guard_band) {
    ScatterBreakdown b;
    b.model = ScatterModel::PT;
    for (auto m : {ManifoldLabel::g, ManifoldLabel::gp, ManifoldLabel::gpp}) {
        double rate = 0.0;
        for (const auto& f : manifold_states(ion, m)) {
            const double r = pt_rate(ion, laser, initial, f, guard_band);
            rate += r;
            if (f.same_state(initial)) b.rayleigh = r;
        }
        if (m == ManifoldLabel::g) b.rate_S = rate;
        else if (m == ManifoldLabel::gp) b.rate_D32 = rate;
        else b.rate_D52 = rate;
    }
    finish_breakdown(b);
    return b;
}

ScatterBreakdown cda_rates(const IonModel& ion, double g_coupling, double omega_l,
                           double guard_band) {
    check_guard(ion, omega_l, ManifoldLabel::g, guard_band);
    const double delta = omega_l - ion.energy(ManifoldLabel::e);
    const double wfs = ion.fine_structure_splitting();
    const double dp = delta - wfs;  // detuning from e'
    const double g2_3 = g_coupling * g_coupling / 3.0;

    const double A_eg = ion.line(ManifoldLabel::e, ManifoldLabel::g)->einstein_A;
    const double A_egp = ion.line(ManifoldLabel::e, ManifoldLabel::gp)->einstein_A;
    const double A_epg = ion.line(ManifoldLabel::ep, ManifoldLabel::g)->einstein_A;
    const double A_epgp = ion.line(ManifoldLabel::ep, ManifoldLabel::gp)->einstein_A;
    const double A_epgpp = ion.line(ManifoldLabel::ep, ManifoldLabel::gpp)->einstein_A;

    ScatterBreakdown b;
    b.model = ScatterModel::CDA;
    b.rate_S = A_eg * g2_3 / (delta * delta) + A_epg * g2_3 * 2.0 / (dp * dp);
    b.rate_D32 = A_egp * g2_3 / (delta * delta) + A_epgp * g2_3 * 2.0 / (dp * dp);
    b.rate_D52 = A_epgpp * g2_3 * 2.0 / (dp * dp);
    b.rayleigh = A_epg * g2_3 *
                 (3.0 * delta * delta - 2.0 * delta * wfs + wfs * wfs / 3.0) /
                 (delta * delta * dp * dp);
    finish_breakdown(b);
    return b;
}

ScatterBreakdown w3_rates(const IonModel& ion, double g_coupling, double omega_l,
                          double guard_band) {
    check_guard(ion, omega_l, ManifoldLabel::g, guard_band);
    const double delta = omega_l - ion.energy(ManifoldLabel::e);
    const double wfs = ion.fine_structure_splitting();
    const double dp = delta - wfs;
    const double g2_3 = g_coupling * g_coupling / 3.0;

    const auto* eg = ion.line(ManifoldLabel::e, ManifoldLabel::g);
    const auto* egp = ion.line(ManifoldLabel::e, ManifoldLabel::gp);
    const auto* epg = ion.line(ManifoldLabel::ep, ManifoldLabel::g);
    const auto* epgp = ion.line(ManifoldLabel::ep, ManifoldLabel::gp);
    const auto* epgpp = ion.line(ManifoldLabel::ep, ManifoldLabel::gpp);

    const double w_ggp = ion.energy(ManifoldLabel::gp);
    const double w_ggpp = ion.energy(ManifoldLabel::gpp);

    auto dos = [](double w_sc, const TransitionLine* ln) {
        return theta_cubed(w_sc) / (ln->transition_frequency * ln->transition_frequency *
                                    ln->transition_frequency);
    };

    ScatterBreakdown b;
    b.model = ScatterModel::W3;
    b.rate_S = dos(omega_l, eg) * eg->einstein_A * g2_3 / (delta * delta) +
               dos(omega_l, epg) * epg->einstein_A * g2_3 * 2.0 / (dp * dp);
    b.rate_D32 = dos(omega_l - w_ggp, egp) * egp->einstein_A * g2_3 / (delta * delta) +
                 dos(omega_l - w_ggp, epgp) * epgp->einstein_A * g2_3 * 2.0 / (dp * dp);
    b.rate_D52 = dos(omega_l - w_ggpp, epgpp) * epgpp->einstein_A * g2_3 * 2.0 / (dp * dp);
    b.rayleigh = dos(omega_l, epg) * epg->einstein_A * g2_3 *
                 (3.0 * delta * delta - 2.0 * delta * wfs + wfs * wfs / 3.0) /
                 (delta * delta * dp * dp);
    finish_breakdown(b);
    return b;
}

std::vector<SweepRow> sweep_models(const IonModel& ion, double intensity,
                                   double omega_lo, double omega_hi, int grid_size,
                                   double guard_band) {
    if (grid_size < 1) throw ValidationError("grid size must be >= 1");
    if (!(omega_lo > 0.0) || !(omega_hi >= omega_lo))
        throw ValidationError("invalid frequency range");

    std::vector<double> grid(static_cast<size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i)
        grid[static_cast<size_t>(i)] =
            grid_size == 1 ? omega_lo
                           : omega_lo + (omega_hi - omega_lo) * i / (grid_size - 1);
    for (double w : grid) check_guard(ion, w, ManifoldLabel::g, guard_band);

    // g(I): sigma+ stretch-transition half-Rabi at this intensity
    const double mu = stretch_dipole(ion);
    const double e_per_sqrtI = std::sqrt(2.0 / (eps0 * c));
    const double g_of_I = e_per_sqrtI * std::sqrt(intensity) * mu / (2.0 * hbar);

    std::vector<SweepRow> rows(grid.size() * 3);
    auto fill = [&](size_t i) {
        const double w = grid[i];
        const double lam = omega_to_wavelength(w) * 1e9;
        const LaserField laser = LaserField::sigma_plus(w, intensity);
        rows[3 * i + 0] = {w, lam, ScatterModel::CDA, cda_rates(ion, g_of_I, w, guard_band)};
        rows[3 * i + 1] = {w, lam, ScatterModel::W3, w3_rates(ion, g_of_I, w, guard_band)};
        rows[3 * i + 2] = {w, lam, ScatterModel::PT,
                           pt_breakdown(ion, laser, clock_state(ion), guard_band)};
    };

    const size_t n = grid.size();
    const unsigned hw = std::thread::hardware_concurrency();
    if (n >= 64 && hw > 1) {
        const unsigned nthreads = std::min<unsigned>(hw, 8);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t] {
                for (size_t i = t; i < n; i += nthreads) fill(i);
            });
        for (auto& th : pool) th.join();
    } else {
        for (size_t i = 0; i < n; ++i) fill(i);
    }
    return rows;
}

} // namespace srs

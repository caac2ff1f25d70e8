#include "srs/states.hpp"

#include <cmath>

#include "srs/constants.hpp"
#include "srs/errors.hpp"
#include "srs/wigner.hpp"

namespace srs {

namespace {

bool is_p_manifold(ManifoldLabel m) { return m == ManifoldLabel::e || m == ManifoldLabel::ep; }

int parity_of(int twice) { return (((twice / 2) % 2) == 0) ? 1 : -1; }

// <J_f m_f| d_q |J_k m_k> = (-1)^(J_f - m_f) (J_f 1 J_k; -m_f q m_k) <J_f||d||J_k>
double electronic_element(HalfInt Jf, HalfInt mf, int q, HalfInt Jk, HalfInt mk,
                          double reduced_f_k) {
    const double threej = wigner3j(Jf, HalfInt::from_twice(2), Jk,
                                   -mf, HalfInt::from_twice(2 * q), mk);
    if (threej == 0.0) return 0.0;
    const int phase = parity_of(Jf.twice() - mf.twice());
    return phase * threej * reduced_f_k;
}

} // namespace

AtomState AtomState::make(const IonModel& ion, ManifoldLabel m, HalfInt F, HalfInt mF) {
    const HalfInt J = ion.J(m);
    const HalfInt I = ion.nuclear_spin();
    if (F.twice() < std::abs(J.twice() - I.twice()) || F.twice() > J.twice() + I.twice())
        throw ValidationError("F=" + F.str() + " outside |J-I|..J+I for manifold " + to_string(m));
    if (std::abs(mF.twice()) > F.twice())
        throw ValidationError("|mF| > F");
    if ((F.twice() + mF.twice()) % 2 != 0)
        throw ValidationError("mF and F must differ by an integer");

    AtomState st;
    st.manifold = m;
    st.F = F;
    st.mF = mF;
    for (int tmJ = -J.twice(); tmJ <= J.twice(); tmJ += 2) {
        const int tmI = mF.twice() - tmJ;
        if (std::abs(tmI) > I.twice()) continue;
        const double cg = clebsch_gordan(J, HalfInt::from_twice(tmJ),
                                         I, HalfInt::from_twice(tmI), F, mF);
        if (cg != 0.0)
            st.components.push_back({HalfInt::from_twice(tmJ), HalfInt::from_twice(tmI), cg});
    }
    return st;
}

std::vector<AtomState> manifold_states(const IonModel& ion, ManifoldLabel m) {
    const HalfInt J = ion.J(m);
    const HalfInt I = ion.nuclear_spin();
    std::vector<AtomState> out;
    for (int tF = std::abs(J.twice() - I.twice()); tF <= J.twice() + I.twice(); tF += 2)
        for (int tmF = -tF; tmF <= tF; tmF += 2)
            out.push_back(AtomState::make(ion, m, HalfInt::from_twice(tF), HalfInt::from_twice(tmF)));
    return out;
}

double reduced_dipole_from_A(const TransitionLine& line, const IonModel& ion) {
    const HalfInt Ju = ion.J(line.upper);
    const double w = line.transition_frequency;
    const double kappa = 3.0 * constants::pi * constants::eps0 * constants::hbar *
                         constants::c * constants::c * constants::c;
    return std::sqrt(line.einstein_A * kappa * (Ju.twice() + 1.0) / (w * w * w));
}

double dipole_element(const AtomState& bra, int q, const AtomState& ket, const IonModel& ion) {
    if (q < -1 || q > 1) throw ValidationError("spherical component q must be -1, 0 or +1");
    if (bra.mF.twice() != ket.mF.twice() + 2 * q) return 0.0;
    if (std::abs(bra.F.twice() - ket.F.twice()) > 2) return 0.0;
    if (!ion.dipole_connected(bra.manifold, ket.manifold)) return 0.0;

    // reduced element <bra-manifold || d || ket-manifold> with the
    // lower->upper direction defined positive
    double reduced;
    if (is_p_manifold(ket.manifold)) {
        const TransitionLine* ln = ion.line(ket.manifold, bra.manifold);
        reduced = reduced_dipole_from_A(*ln, ion);  // <lower||d||upper>
    } else {
        const TransitionLine* ln = ion.line(bra.manifold, ket.manifold);
        // <upper||d||lower> = (-1)^(J_upper - J_lower) <lower||d||upper>
        const int ph = parity_of(ion.J(bra.manifold).twice() - ion.J(ket.manifold).twice());
        reduced = ph * reduced_dipole_from_A(*ln, ion);
    }

    const HalfInt Jf = ion.J(bra.manifold), Jk = ion.J(ket.manifold);
    double sum = 0.0;
    for (const auto& cf : bra.components)
        for (const auto& ck : ket.components) {
            if (cf.mI.twice() != ck.mI.twice()) continue;  // nuclear spin is a spectator
            sum += cf.coeff * ck.coeff *
                   electronic_element(Jf, cf.mJ, q, Jk, ck.mJ, reduced);
        }
    return sum;
}

double stretch_dipole(const IonModel& ion) {
    double best = 0.0;
    const auto gs = manifold_states(ion, ManifoldLabel::g);
    const auto es = manifold_states(ion, ManifoldLabel::ep);
    for (const auto& g : gs)
        for (const auto& e : es)
            best = std::max(best, std::abs(dipole_element(e, +1, g, ion)));
    return best;
}

} // namespace srs

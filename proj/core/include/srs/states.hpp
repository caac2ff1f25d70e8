#pragma once

#include <vector>

#include "srs/half_int.hpp"
#include "srs/ion_model.hpp"

namespace srs {

// Hyperfine state |manifold; F, mF>, expanded over the decoupled
// |J mJ> x |I mI> product basis with Clebsch-Gordan coefficients.
struct AtomState {
    ManifoldLabel manifold{};
    HalfInt F;
    HalfInt mF;

    struct Component {
        HalfInt mJ;
        HalfInt mI;
        double coeff;  // <J mJ; I mI | F mF>
    };
    std::vector<Component> components;

    static AtomState make(const IonModel& ion, ManifoldLabel m, HalfInt F, HalfInt mF);
    bool same_state(const AtomState& o) const {
        return manifold == o.manifold && F == o.F && mF == o.mF;
    }
};

// All |F, mF> states of a manifold, F from |J-I| to J+I.
std::vector<AtomState> manifold_states(const IonModel& ion, ManifoldLabel m);

// |<J_lower || d || J_upper>| from the line's Einstein A coefficient:
//   A = w^3 / (3 pi eps0 hbar c^3) * |<lower||d||upper>|^2 / (2 J_upper + 1)
// Reduced matrix elements are taken real and positive in this direction;
// Condon-Shortley phases live in the 3j factors.
double reduced_dipole_from_A(const TransitionLine& line, const IonModel& ion);

// <bra| d_q |ket> in C m. Zero (not an error) when the manifold pair is not
// dipole-connected or a selection rule fails. The nuclear projection is a
// spectator: the operator acts on the electronic part only.
double dipole_element(const AtomState& bra, int q, const AtomState& ket, const IonModel& ion);

// Largest |<e' sublevel| d_{+1} |g sublevel>|, i.e. the sigma+ stretch
// transition element of the S1/2 <-> P3/2 line.
double stretch_dipole(const IonModel& ion);

} // namespace srs

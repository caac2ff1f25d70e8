#pragma once

#include <array>
#include <optional>
#include <string>

#include "srs/half_int.hpp"

namespace srs {

// The five electronic manifolds, in the shorthand used throughout:
//   g = 2S1/2, e = 2P1/2, e' = 2P3/2, g' = 2D3/2, g'' = 2D5/2
enum class ManifoldLabel { g, e, ep, gp, gpp };

std::string to_string(ManifoldLabel m);
std::optional<ManifoldLabel> manifold_from_string(const std::string& s);

struct Manifold {
    ManifoldLabel label{};
    std::string term;   // spectroscopic term, e.g. "2S1/2"
    HalfInt J;
    double energy = 0.0;  // rad/s relative to g
};

struct TransitionLine {
    ManifoldLabel upper{};
    ManifoldLabel lower{};
    double einstein_A = 0.0;          // s^-1
    double transition_frequency = 0.0; // rad/s, energy(upper) - energy(lower)
};

class IonModel {
public:
    IonModel(std::string name, HalfInt nuclear_spin, double mass_kg,
             std::array<Manifold, 5> manifolds, std::array<TransitionLine, 5> lines);

    const std::string& name() const { return name_; }
    HalfInt nuclear_spin() const { return nuclear_spin_; }
    double mass() const { return mass_; }

    const Manifold& manifold(ManifoldLabel m) const;
    double energy(ManifoldLabel m) const { return manifold(m).energy; }
    HalfInt J(ManifoldLabel m) const { return manifold(m).J; }

    const std::array<TransitionLine, 5>& lines() const { return lines_; }
    // nullptr when the manifold pair is not one of the five dipole lines
    const TransitionLine* line(ManifoldLabel upper, ManifoldLabel lower) const;
    bool dipole_connected(ManifoldLabel a, ManifoldLabel b) const;

    // omega_FS = energy(e') - energy(e)
    double fine_structure_splitting() const;

private:
    std::string name_;
    HalfInt nuclear_spin_;
    double mass_ = 0.0;
    std::array<Manifold, 5> manifolds_;
    std::array<TransitionLine, 5> lines_;
};

// Reads the JSON ion data file (keys: name, nuclear_spin, mass_amu, levels,
// lines; energies in cm^-1, A in s^-1) and validates every structural
// invariant. Unknown keys are rejected.
IonModel load_ion_model(const std::string& path);

// Inverse of load_ion_model; load(save(ion)) reproduces the model exactly.
void save_ion_model(const IonModel& ion, const std::string& path);

} // namespace srs

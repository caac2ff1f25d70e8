#include "srs/ion_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "srs/constants.hpp"
#include "srs/errors.hpp"
#include "srs/units.hpp"

namespace srs {

namespace {

const std::map<std::string, ManifoldLabel> kLabelNames = {
    {"g", ManifoldLabel::g},   {"e", ManifoldLabel::e},   {"e'", ManifoldLabel::ep},
    {"g'", ManifoldLabel::gp}, {"g''", ManifoldLabel::gpp}};

// J values of the five manifolds are part of the model definition.
int expected_twice_J(ManifoldLabel m) {
    switch (m) {
        case ManifoldLabel::g:   return 1;
        case ManifoldLabel::e:   return 1;
        case ManifoldLabel::ep:  return 3;
        case ManifoldLabel::gp:  return 3;
        case ManifoldLabel::gpp: return 5;
    }
    return 0;
}

// the five dipole lines of the model (upper, lower)
const std::array<std::pair<ManifoldLabel, ManifoldLabel>, 5> kLinePairs = {{
    {ManifoldLabel::e, ManifoldLabel::g},
    {ManifoldLabel::e, ManifoldLabel::gp},
    {ManifoldLabel::ep, ManifoldLabel::g},
    {ManifoldLabel::ep, ManifoldLabel::gp},
    {ManifoldLabel::ep, ManifoldLabel::gpp},
}};

void reject_unknown_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw ValidationError("unknown key '" + it.key() + "' in " + where);
    }
}

size_t index_of(ManifoldLabel m) { return static_cast<size_t>(m); }

} // namespace

std::string to_string(ManifoldLabel m) {
    for (const auto& [name, label] : kLabelNames)
        if (label == m) return name;
    return "?";
}

std::optional<ManifoldLabel> manifold_from_string(const std::string& s) {
    auto it = kLabelNames.find(s);
    if (it == kLabelNames.end()) return std::nullopt;
    return it->second;
}

IonModel::IonModel(std::string name, HalfInt nuclear_spin, double mass_kg,
                   std::array<Manifold, 5> manifolds, std::array<TransitionLine, 5> lines)
    : name_(std::move(name)),
      nuclear_spin_(nuclear_spin),
      mass_(mass_kg),
      manifolds_(manifolds),
      lines_(lines) {
    if (!(mass_ > 0.0)) throw ValidationError("mass: must be > 0");
    if (nuclear_spin_.twice() < 0) throw ValidationError("nuclear_spin: must be >= 0");

    for (size_t i = 0; i < 5; ++i) {
        const auto m = static_cast<ManifoldLabel>(i);
        if (manifolds_[i].label != m)
            throw ValidationError("levels: manifold '" + to_string(m) + "' misplaced or missing");
        if (manifolds_[i].J.twice() != expected_twice_J(m))
            throw ValidationError("levels: J of '" + to_string(m) + "' must be " +
                                  HalfInt::from_twice(expected_twice_J(m)).str());
    }
    if (energy(ManifoldLabel::g) != 0.0)
        throw ValidationError("levels: energy of 'g' must be exactly 0");
    for (size_t i = 1; i < 5; ++i)
        if (!(manifolds_[i].energy > 0.0))
            throw ValidationError("levels: energy of '" + to_string(manifolds_[i].label) +
                                  "' must be > 0");
    const double Eg = 0.0, Egp = energy(ManifoldLabel::gp), Egpp = energy(ManifoldLabel::gpp),
                 Ee = energy(ManifoldLabel::e), Eep = energy(ManifoldLabel::ep);
    if (!(Eg < Egp && Egp < Egpp && Egpp < Ee && Ee < Eep))
        throw ValidationError("levels: energy ordering g < g' < g'' < e < e' violated");

    for (size_t i = 0; i < 5; ++i) {
        auto& ln = lines_[i];
        if (ln.upper != kLinePairs[i].first || ln.lower != kLinePairs[i].second)
            throw ValidationError("lines: line " + to_string(kLinePairs[i].first) + "->" +
                                  to_string(kLinePairs[i].second) + " misplaced or missing");
        if (!(ln.einstein_A > 0.0))
            throw ValidationError("lines: A of " + to_string(ln.upper) + "->" +
                                  to_string(ln.lower) + " must be > 0");
        ln.transition_frequency = energy(ln.upper) - energy(ln.lower);
    }
}

const Manifold& IonModel::manifold(ManifoldLabel m) const { return manifolds_[index_of(m)]; }

const TransitionLine* IonModel::line(ManifoldLabel upper, ManifoldLabel lower) const {
    for (const auto& ln : lines_)
        if (ln.upper == upper && ln.lower == lower) return &ln;
    return nullptr;
}

bool IonModel::dipole_connected(ManifoldLabel a, ManifoldLabel b) const {
    return line(a, b) != nullptr || line(b, a) != nullptr;
}

double IonModel::fine_structure_splitting() const {
    return energy(ManifoldLabel::ep) - energy(ManifoldLabel::e);
}

IonModel load_ion_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open ion file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("ion file parse error: " + std::string(e.what()));
    }
    if (!j.is_object()) throw ValidationError("ion file: top level must be an object");
    reject_unknown_keys(j, {"name", "nuclear_spin", "mass_amu", "levels", "lines"}, "ion file");
    for (const char* key : {"name", "nuclear_spin", "mass_amu", "levels", "lines"})
        if (!j.contains(key)) throw ValidationError(std::string("ion file: missing key '") + key + "'");

    const std::string name = j.at("name").get<std::string>();
    const HalfInt I = HalfInt::from_double(j.at("nuclear_spin").get<double>());
    const double mass = j.at("mass_amu").get<double>() * constants::amu;

    if (!j.at("levels").is_array() || j.at("levels").size() != 5)
        throw ValidationError("levels: expected exactly 5 entries");
    std::array<Manifold, 5> manifolds{};
    std::array<bool, 5> seen_level{};
    for (const auto& lv : j.at("levels")) {
        reject_unknown_keys(lv, {"label", "term", "J", "energy_cm1"}, "levels entry");
        const auto label = manifold_from_string(lv.at("label").get<std::string>());
        if (!label) throw ValidationError("levels: unknown label '" +
                                          lv.at("label").get<std::string>() + "'");
        const size_t idx = index_of(*label);
        if (seen_level[idx]) throw ValidationError("levels: duplicate label '" + to_string(*label) + "'");
        seen_level[idx] = true;
        manifolds[idx] = Manifold{*label, lv.at("term").get<std::string>(),
                                  HalfInt::from_double(lv.at("J").get<double>()),
                                  wavenumber_cm_to_omega(lv.at("energy_cm1").get<double>())};
    }

    if (!j.at("lines").is_array() || j.at("lines").size() != 5)
        throw ValidationError("lines: expected exactly 5 entries");
    std::array<TransitionLine, 5> lines{};
    std::array<bool, 5> seen_line{};
    for (const auto& ln : j.at("lines")) {
        reject_unknown_keys(ln, {"upper", "lower", "A_per_s"}, "lines entry");
        const auto upper = manifold_from_string(ln.at("upper").get<std::string>());
        const auto lower = manifold_from_string(ln.at("lower").get<std::string>());
        if (!upper || !lower) throw ValidationError("lines: unknown manifold label");
        const auto it = std::find(kLinePairs.begin(), kLinePairs.end(),
                                  std::make_pair(*upper, *lower));
        if (it == kLinePairs.end())
            throw ValidationError("lines: " + to_string(*upper) + "->" + to_string(*lower) +
                                  " is not a dipole line of this model");
        const size_t idx = static_cast<size_t>(it - kLinePairs.begin());
        if (seen_line[idx]) throw ValidationError("lines: duplicate line");
        seen_line[idx] = true;
        lines[idx] = TransitionLine{*upper, *lower, ln.at("A_per_s").get<double>(), 0.0};
    }

    return IonModel(name, I, mass, manifolds, lines);
}

void save_ion_model(const IonModel& ion, const std::string& path) {
    nlohmann::json j;
    j["name"] = ion.name();
    j["nuclear_spin"] = ion.nuclear_spin().value();
    j["mass_amu"] = ion.mass() / constants::amu;
    j["levels"] = nlohmann::json::array();
    for (auto m : {ManifoldLabel::g, ManifoldLabel::e, ManifoldLabel::ep,
                   ManifoldLabel::gp, ManifoldLabel::gpp}) {
        const auto& mf = ion.manifold(m);
        j["levels"].push_back({{"label", to_string(m)},
                               {"term", mf.term},
                               {"J", mf.J.value()},
                               {"energy_cm1", mf.energy / (2.0 * constants::pi * constants::c * 100.0)}});
    }
    j["lines"] = nlohmann::json::array();
    for (const auto& ln : ion.lines())
        j["lines"].push_back({{"upper", to_string(ln.upper)},
                              {"lower", to_string(ln.lower)},
                              {"A_per_s", ln.einstein_A}});
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write ion file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace srs

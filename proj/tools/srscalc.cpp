// srscalc: scattering rates, Stark shifts, gate-error budgets and the
// measurement-pipeline simulator for the five-manifold ion model.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "srs/errors.hpp"
#include "srs/experiment.hpp"
#include "srs/gate_budget.hpp"
#include "srs/light_shift.hpp"
#include "srs/manifest.hpp"
#include "srs/scattering.hpp"
#include "srs/units.hpp"

#ifndef SRS_DEFAULT_ION_FILE
#define SRS_DEFAULT_ION_FILE "ba133.ion"
#endif

namespace {

using namespace srs;

struct CommonOpts {
    std::string ion_path = SRS_DEFAULT_ION_FILE;
    std::string out_path = "-";
    bool deterministic = false;
};

struct FreqOpt {
    double lambda_nm = 0.0;
    double omega_rads = 0.0;
    double omega() const {
        if (lambda_nm > 0.0 && omega_rads > 0.0)
            throw ValidationError("give exactly one of --lambda-nm / --omega-rads");
        if (lambda_nm > 0.0) return wavelength_to_omega(lambda_nm * 1e-9);
        if (omega_rads > 0.0) return omega_rads;
        throw ValidationError("one of --lambda-nm / --omega-rads is required");
    }
};

struct IntensityOpt {
    double intensity = -1.0;
    double power_w = -1.0;
    double waist_um = -1.0;
    double value() const {
        const bool have_i = intensity >= 0.0;
        const bool have_p = power_w >= 0.0 || waist_um > 0.0;
        if (have_i && have_p)
            throw ValidationError("give --intensity or --power-w/--waist-um, not both");
        if (have_i) return intensity;
        if (power_w >= 0.0 && waist_um > 0.0) return peak_intensity(power_w, waist_um * 1e-6);
        throw ValidationError("intensity required: --intensity (W/m^2) or --power-w with --waist-um");
    }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--ion", c.ion_path, "ion data file (JSON)")->capture_default_str();
    cmd->add_option("--out", c.out_path, "output file, '-' for stdout")->capture_default_str();
    cmd->add_flag("--deterministic", c.deterministic,
                  "write an epoch timestamp so identical runs are byte-identical");
}

void add_freq(CLI::App* cmd, FreqOpt& f) {
    cmd->add_option("--lambda-nm", f.lambda_nm, "laser vacuum wavelength (nm)");
    cmd->add_option("--omega-rads", f.omega_rads, "laser angular frequency (rad/s)");
}

void add_intensity(CLI::App* cmd, IntensityOpt& i) {
    cmd->add_option("--intensity", i.intensity, "laser intensity (W/m^2)");
    cmd->add_option("--power-w", i.power_w, "beam power (W); peak intensity 2P/(pi w0^2)");
    cmd->add_option("--waist-um", i.waist_um, "1/e^2 intensity radius w0 (micron)");
}

std::unique_ptr<std::ostream> open_out(const std::string& path, std::ostream*& os) {
    if (path == "-") {
        os = &std::cout;
        return nullptr;
    }
    auto f = std::make_unique<std::ofstream>(path);
    if (!*f) throw ValidationError("cannot open output file: " + path);
    os = f.get();
    return f;
}

LaserField make_field(double omega, double intensity, const std::string& pol) {
    if (pol == "sigma+") return LaserField::sigma_plus(omega, intensity);
    if (pol == "sigma-") return LaserField::sigma_minus(omega, intensity);
    if (pol == "pi") return LaserField::pi_pol(omega, intensity);
    throw ValidationError("polarization must be sigma+, sigma- or pi");
}

void write_sweep_rows(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "omega_l_rad_s,lambda_nm,model,gamma_total,gamma_rayleigh,gamma_raman,"
          "gamma_S,gamma_D32,gamma_D52,eta_D52\n";
    for (const auto& r : rows) {
        const auto& b = r.breakdown;
        os << csv_num(r.omega_l) << "," << csv_num(r.lambda_nm) << "," << to_string(r.model)
           << "," << csv_num(b.total) << "," << csv_num(b.rayleigh) << "," << csv_num(b.raman)
           << "," << csv_num(b.rate_S) << "," << csv_num(b.rate_D32) << ","
           << csv_num(b.rate_D52) << "," << csv_num(b.eta_D52) << "\n";
    }
}

nlohmann::json breakdown_json(const ScatterBreakdown& b) {
    return {{"model", to_string(b.model)},
            {"gamma_total", b.total},
            {"gamma_rayleigh", b.rayleigh},
            {"gamma_raman", b.raman},
            {"gamma_S", b.rate_S},
            {"gamma_D32", b.rate_D32},
            {"gamma_D52", b.rate_D52},
            {"eta_D52", b.eta_D52}};
}

void print_breakdown_table(std::ostream& os, const ScatterBreakdown& b) {
    os << "model           " << to_string(b.model) << "\n";
    os << "gamma_total     " << csv_num(b.total) << "  s^-1\n";
    os << "gamma_rayleigh  " << csv_num(b.rayleigh) << "  s^-1\n";
    os << "gamma_raman     " << csv_num(b.raman) << "  s^-1\n";
    os << "gamma_S         " << csv_num(b.rate_S) << "  s^-1\n";
    os << "gamma_D32       " << csv_num(b.rate_D32) << "  s^-1\n";
    os << "gamma_D52       " << csv_num(b.rate_D52) << "  s^-1\n";
    os << "eta_D52         " << csv_num(b.eta_D52) << "\n";
}

double guard_from_ghz(double ghz) { return 2.0 * constants::pi * ghz * 1e9; }

int cmd_rates(const CommonOpts& c, const FreqOpt& f, const IntensityOpt& in,
              const std::string& model, const std::string& pol, const std::string& state,
              const std::string& format, double guard_ghz) {
    const auto ion = load_ion_model(c.ion_path);
    const double w = f.omega();
    const double I = in.value();
    const double guard = guard_from_ghz(guard_ghz);
    const auto laser = make_field(w, I, pol);

    double Fv = 0.0, mFv = 0.0;
    {
        std::istringstream ss(state);
        char comma = 0;
        if (!(ss >> Fv >> comma >> mFv) || comma != ',')
            throw ValidationError("--state must be 'F,mF'");
    }
    const auto initial =
        AtomState::make(ion, ManifoldLabel::g, HalfInt::from_double(Fv), HalfInt::from_double(mFv));
    const double g = coupling_g(ion, laser);

    std::vector<ScatterBreakdown> out;
    if (model == "cda" || model == "all") out.push_back(cda_rates(ion, g, w, guard));
    if (model == "w3" || model == "all") out.push_back(w3_rates(ion, g, w, guard));
    if (model == "pt" || model == "all") out.push_back(pt_breakdown(ion, laser, initial, guard));
    if (out.empty()) throw ValidationError("--model must be cda, w3, pt or all");

    std::ostream* os = nullptr;
    auto holder = open_out(c.out_path, os);
    auto man = RunManifest::make("rates", c.ion_path, c.deterministic);
    man.add("omega_l_rad_s", csv_num(w));
    man.add("intensity_w_m2", csv_num(I));
    man.add("pol", pol);
    man.add("state", state);
    man.add("model", model);

    if (format == "json") {
        nlohmann::json j;
        j["manifest"] = {{"command", man.command},
                         {"ion_checksum", man.ion_checksum},
                         {"version", man.version},
                         {"timestamp", man.timestamp}};
        j["breakdowns"] = nlohmann::json::array();
        for (const auto& b : out) j["breakdowns"].push_back(breakdown_json(b));
        *os << j.dump(2) << "\n";
    } else if (format == "table") {
        man.write(*os);
        for (const auto& b : out) {
            print_breakdown_table(*os, b);
            *os << "\n";
        }
    } else {
        throw ValidationError("--format must be table or json");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"laser-induced scattering rates, Stark shifts and gate-error budgets\n"
                 "for a five-manifold trapped-ion model. Frequencies are given as vacuum\n"
                 "wavelength (--lambda-nm) or angular frequency (--omega-rads, rad/s);\n"
                 "intensities in W/m^2."};
    app.require_subcommand(1);

    // ---------------- rates ----------------
    CommonOpts rc;
    FreqOpt rf;
    IntensityOpt ri;
    std::string r_model = "all", r_pol = "sigma+", r_state = "0,0", r_format = "table";
    double r_guard_ghz = 10.0;
    auto* rates = app.add_subcommand("rates", "scattering-rate breakdown at one frequency");
    add_common(rates, rc);
    add_freq(rates, rf);
    add_intensity(rates, ri);
    rates->add_option("--model", r_model, "cda|w3|pt|all")->capture_default_str();
    rates->add_option("--pol", r_pol, "laser polarization: sigma+|sigma-|pi")->capture_default_str();
    rates->add_option("--state", r_state, "initial hyperfine state of g as 'F,mF'")
        ->capture_default_str();
    rates->add_option("--format", r_format, "table|json")->capture_default_str();
    rates->add_option("--guard-ghz", r_guard_ghz, "resonance guard band (GHz)")
        ->capture_default_str();

    // ---------------- sweep ----------------
    CommonOpts sc;
    IntensityOpt si;
    double s_lmin = 0, s_lmax = 0, s_wmin = 0, s_wmax = 0;
    int s_points = 101;
    double s_guard_ghz = 10.0;
    auto* sweep = app.add_subcommand("sweep", "all three models on a frequency grid (CSV)");
    add_common(sweep, sc);
    add_intensity(sweep, si);
    sweep->add_option("--lambda-min-nm", s_lmin, "grid start, vacuum nm");
    sweep->add_option("--lambda-max-nm", s_lmax, "grid end, vacuum nm");
    sweep->add_option("--omega-min-rads", s_wmin, "grid start, rad/s");
    sweep->add_option("--omega-max-rads", s_wmax, "grid end, rad/s");
    sweep->add_option("--points", s_points, "grid size")->capture_default_str();
    sweep->add_option("--guard-ghz", s_guard_ghz, "resonance guard band (GHz)")
        ->capture_default_str();

    // ---------------- branching ----------------
    CommonOpts bc;
    FreqOpt bf;
    bool b_sweep = false;
    double b_lmin = 0, b_lmax = 0;
    int b_points = 201;
    double b_guard_ghz = 10.0;
    auto* branching = app.add_subcommand("branching", "SRS branching fraction to D5/2");
    add_common(branching, bc);
    add_freq(branching, bf);
    branching->add_flag("--sweep", b_sweep, "emit a frequency sweep instead of one point");
    branching->add_option("--lambda-min-nm", b_lmin, "sweep start, vacuum nm");
    branching->add_option("--lambda-max-nm", b_lmax, "sweep end, vacuum nm");
    branching->add_option("--points", b_points, "sweep grid size")->capture_default_str();
    branching->add_option("--guard-ghz", b_guard_ghz, "resonance guard band (GHz)")
        ->capture_default_str();

    // ---------------- gate-error ----------------
    CommonOpts gc;
    FreqOpt gf;
    int g_beams = 3, g_K = 1;
    double g_mode_mhz = 5.0, g_lmin = 0, g_lmax = 0;
    int g_points = 0;
    std::string g_model = "both";
    double g_guard_ghz = 10.0;
    bool g_exact = false;
    auto* gate = app.add_subcommand("gate-error", "two-qubit gate error from SRS");
    add_common(gate, gc);
    add_freq(gate, gf);
    gate->add_option("--beams", g_beams,
                     "3 (two beams + double-intensity counter beam) or 4 (balanced)")
        ->capture_default_str();
    gate->add_option("--K", g_K, "phase-space loop count")->capture_default_str();
    gate->add_option("--mode-mhz", g_mode_mhz, "motional mode frequency (MHz)")
        ->capture_default_str();
    gate->add_option("--model", g_model, "cda|w3|both")->capture_default_str();
    gate->add_option("--lambda-min-nm", g_lmin, "sweep start, vacuum nm");
    gate->add_option("--lambda-max-nm", g_lmax, "sweep end, vacuum nm");
    gate->add_option("--points", g_points, "sweep grid size (0 = single point)")
        ->capture_default_str();
    gate->add_flag("--exact", g_exact, "also print the exponential (non-linearized) error");
    gate->add_option("--guard-ghz", g_guard_ghz, "resonance guard band (GHz)")
        ->capture_default_str();

    // ---------------- stark ----------------
    CommonOpts kc;
    FreqOpt kf;
    IntensityOpt ki;
    std::string k_pair = "o", k_pol = "sigma+";
    double k_guard_ghz = 10.0;
    auto* stark = app.add_subcommand("stark", "differential AC Stark shift of a qubit pair");
    add_common(stark, kc);
    add_freq(stark, kf);
    add_intensity(stark, ki);
    stark->add_option("--pair", k_pair, "o (S<->D5/2 clock pair) or g (S clock pair)")
        ->capture_default_str();
    stark->add_option("--pol", k_pol, "laser polarization: sigma+|sigma-|pi")->capture_default_str();
    stark->add_option("--guard-ghz", k_guard_ghz, "resonance guard band (GHz)")
        ->capture_default_str();

    // ---------------- simulate ----------------
    CommonOpts mc;
    std::uint64_t m_seed = 0;
    double m_slope = 1e-10, m_xmin = 1e5, m_xmax = 1e6, m_tau_ms = 8.0, m_bg = 6e-4,
           m_sigx = 0.01;
    int m_points = 8;
    long m_shots = 50000;
    auto* simulate = app.add_subcommand(
        "simulate", "simulate the rate-vs-Stark-shift measurement (CSV x,sigma_x,y,sigma_y)");
    add_common(simulate, mc);
    simulate->add_option("--seed", m_seed, "RNG seed (required for reproducibility)")->required();
    simulate->add_option("--slope", m_slope, "true rate per shift (s^-1 per rad/s)")
        ->capture_default_str();
    simulate->add_option("--x-min", m_xmin, "smallest Stark shift (rad/s)")->capture_default_str();
    simulate->add_option("--x-max", m_xmax, "largest Stark shift (rad/s)")->capture_default_str();
    simulate->add_option("--points", m_points, "number of intensity settings")->capture_default_str();
    simulate->add_option("--shots", m_shots, "measurements per setting")->capture_default_str();
    simulate->add_option("--tau-ms", m_tau_ms, "laser exposure time (ms)")->capture_default_str();
    simulate->add_option("--background", m_bg, "dark-event background probability")
        ->capture_default_str();
    simulate->add_option("--sigma-x-rel", m_sigx, "relative Gaussian error on x")
        ->capture_default_str();

    // ---------------- fit ----------------
    CommonOpts fc;
    std::string f_input;
    bool f_intercept = false;
    auto* fit = app.add_subcommand("fit",
                                   "orthogonal distance regression on x,sigma_x,y,sigma_y CSV");
    add_common(fit, fc);
    fit->add_option("--input", f_input, "points CSV file")->required();
    fit->add_flag("--intercept", f_intercept, "float an intercept (default: line through origin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rates->parsed())
            return cmd_rates(rc, rf, ri, r_model, r_pol, r_state, r_format, r_guard_ghz);

        if (sweep->parsed()) {
            const auto ion = load_ion_model(sc.ion_path);
            double wlo = 0, whi = 0;
            if (s_lmin > 0.0 && s_lmax > 0.0) {
                wlo = wavelength_to_omega(s_lmax * 1e-9);
                whi = wavelength_to_omega(s_lmin * 1e-9);
            } else if (s_wmin > 0.0 && s_wmax > 0.0) {
                wlo = s_wmin;
                whi = s_wmax;
            } else {
                throw ValidationError(
                    "sweep range required: --lambda-min/max-nm or --omega-min/max-rads");
            }
            const auto rows = sweep_models(ion, si.value(), wlo, whi, s_points,
                                           guard_from_ghz(s_guard_ghz));
            std::ostream* os = nullptr;
            auto holder = open_out(sc.out_path, os);
            auto man = RunManifest::make("sweep", sc.ion_path, sc.deterministic);
            man.add("omega_lo", csv_num(wlo));
            man.add("omega_hi", csv_num(whi));
            man.add("points", std::to_string(s_points));
            man.add("intensity_w_m2", csv_num(si.value()));
            man.write(*os);
            write_sweep_rows(*os, rows);
            return 0;
        }

        if (branching->parsed()) {
            const auto ion = load_ion_model(bc.ion_path);
            const double guard = guard_from_ghz(b_guard_ghz);
            std::ostream* os = nullptr;
            auto holder = open_out(bc.out_path, os);
            auto man = RunManifest::make("branching", bc.ion_path, bc.deterministic);
            if (b_sweep) {
                if (!(b_lmin > 0.0 && b_lmax > 0.0))
                    throw ValidationError("--sweep needs --lambda-min-nm and --lambda-max-nm");
                const double wlo = wavelength_to_omega(b_lmax * 1e-9);
                const double whi = wavelength_to_omega(b_lmin * 1e-9);
                const auto rows = sweep_models(ion, 1.0, wlo, whi, b_points, guard);
                man.add("lambda_min_nm", csv_num(b_lmin));
                man.add("lambda_max_nm", csv_num(b_lmax));
                man.add("points", std::to_string(b_points));
                man.write(*os);
                write_sweep_rows(*os, rows);
            } else {
                const double w = bf.omega();
                const auto rows = sweep_models(ion, 1.0, w, w, 1, guard);
                man.add("omega_l_rad_s", csv_num(w));
                man.write(*os);
                write_sweep_rows(*os, rows);
            }
            return 0;
        }

        if (gate->parsed()) {
            const auto ion = load_ion_model(gc.ion_path);
            const double guard = guard_from_ghz(g_guard_ghz);
            if (g_beams != 3 && g_beams != 4) throw ValidationError("--beams must be 3 or 4");
            const auto kind = g_beams == 3 ? BeamConfigKind::two_qubit_three_beam
                                           : BeamConfigKind::two_qubit_four_beam;
            const auto cfg = GateConfig::make(kind, g_K,
                                              2.0 * constants::pi * g_mode_mhz * 1e6, ion.mass());

            std::ostream* os = nullptr;
            auto holder = open_out(gc.out_path, os);
            auto man = RunManifest::make("gate-error", gc.ion_path, gc.deterministic);
            man.add("beams", std::to_string(g_beams));
            man.add("K", std::to_string(g_K));
            man.add("mode_mhz", csv_num(g_mode_mhz));
            man.add("model", g_model);

            auto want = [&](ScatterModel m) { return g_model == "both" || g_model == to_string(m); };
            if (g_model != "both" && g_model != "cda" && g_model != "w3")
                throw ValidationError("--model must be cda, w3 or both");

            if (g_points > 0) {
                if (!(g_lmin > 0.0 && g_lmax > 0.0))
                    throw ValidationError("sweep needs --lambda-min-nm and --lambda-max-nm");
                const double wlo = wavelength_to_omega(g_lmax * 1e-9);
                const double whi = wavelength_to_omega(g_lmin * 1e-9);
                const auto rows = error_sweep(ion, cfg, wlo, whi, g_points, guard);
                man.write(*os);
                *os << "omega_l_rad_s,lambda_nm,model,eta_lamb_dicke,epsilon_2q\n";
                for (const auto& r : rows) {
                    if (!want(r.model)) continue;
                    *os << csv_num(r.omega_l) << "," << csv_num(r.lambda_nm) << ","
                        << to_string(r.model) << "," << csv_num(r.eta) << ","
                        << csv_num(r.epsilon_2q) << "\n";
                }
            } else {
                const double w = gf.omega();
                const auto rows = error_sweep(ion, cfg, w, w, 1, guard);
                man.add("omega_l_rad_s", csv_num(w));
                man.write(*os);
                *os << "cda_asymptote " << csv_num(cda_asymptote(ion, cfg)) << "\n";
                for (const auto& r : rows) {
                    if (!want(r.model)) continue;
                    *os << "epsilon_2q_" << to_string(r.model) << " " << csv_num(r.epsilon_2q)
                        << "  (eta=" << csv_num(r.eta) << ")\n";
                    if (g_exact) {
                        // reconstruct the exponential form from the linearized value
                        const double eps = r.epsilon_2q;
                        *os << "epsilon_2q_" << to_string(r.model) << "_exact "
                            << csv_num(1.0 - std::exp(-eps)) << "\n";
                    }
                }
            }
            return 0;
        }

        if (stark->parsed()) {
            const auto ion = load_ion_model(kc.ion_path);
            const double w = kf.omega();
            const double I = ki.value();
            const double guard = guard_from_ghz(k_guard_ghz);
            const auto laser = make_field(w, I, k_pol);
            QubitPair pair = k_pair == "o" ? QubitPair::o_type_pair(ion)
                                           : QubitPair::g_type_pair(ion);
            if (k_pair != "o" && k_pair != "g") throw ValidationError("--pair must be o or g");
            const double d = differential_stark(ion, laser, pair, guard);
            auto unit = laser;
            unit.intensity = 1.0;
            const double per_I = differential_stark(ion, unit, pair, guard);

            std::ostream* os = nullptr;
            auto holder = open_out(kc.out_path, os);
            auto man = RunManifest::make("stark", kc.ion_path, kc.deterministic);
            man.add("omega_l_rad_s", csv_num(w));
            man.add("intensity_w_m2", csv_num(I));
            man.add("pair", k_pair);
            man.add("pol", k_pol);
            man.write(*os);
            *os << "delta_rad_s " << csv_num(d) << "\n";
            *os << "delta_per_intensity " << csv_num(per_I) << "  rad/s per W/m^2\n";
            return 0;
        }

        if (simulate->parsed()) {
            DatasetConfig dc;
            dc.slope = m_slope;
            dc.sigma_x_rel = m_sigx;
            dc.shots = m_shots;
            dc.exposure_time = m_tau_ms * 1e-3;
            dc.background_prob = m_bg;
            dc.rng_seed = m_seed;
            if (m_points < 1) throw ValidationError("--points must be >= 1");
            for (int i = 0; i < m_points; ++i)
                dc.x_values.push_back(
                    m_points == 1 ? m_xmin : m_xmin + (m_xmax - m_xmin) * i / (m_points - 1));
            const auto pts = simulate_dataset(dc);

            std::ostream* os = nullptr;
            auto holder = open_out(mc.out_path, os);
            auto man = RunManifest::make("simulate", "", mc.deterministic);
            man.add("seed", std::to_string(m_seed));
            man.add("slope", csv_num(m_slope));
            man.add("points", std::to_string(m_points));
            man.add("shots", std::to_string(m_shots));
            man.add("tau_ms", csv_num(m_tau_ms));
            man.add("background", csv_num(m_bg));
            man.write(*os);
            *os << "x,sigma_x,y,sigma_y\n";
            for (const auto& p : pts)
                *os << csv_num(p.x) << "," << csv_num(p.sigma_x) << "," << csv_num(p.y) << ","
                    << csv_num(p.sigma_y) << "\n";
            return 0;
        }

        if (fit->parsed()) {
            std::ifstream in(f_input);
            if (!in) throw ValidationError("cannot open points file: " + f_input);
            std::vector<FitPoint> pts;
            std::string line;
            bool header_seen = false;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                if (!header_seen) {
                    if (line != "x,sigma_x,y,sigma_y")
                        throw ValidationError(
                            "points file must start with header x,sigma_x,y,sigma_y");
                    header_seen = true;
                    continue;
                }
                std::istringstream ss(line);
                FitPoint p;
                char c1 = 0, c2 = 0, c3 = 0;
                if (!(ss >> p.x >> c1 >> p.sigma_x >> c2 >> p.y >> c3 >> p.sigma_y) ||
                    c1 != ',' || c2 != ',' || c3 != ',')
                    throw ValidationError("bad CSV row: " + line);
                pts.push_back(p);
            }
            const auto res = odr_fit(pts, f_intercept);

            std::ostream* os = nullptr;
            auto holder = open_out(fc.out_path, os);
            auto man = RunManifest::make("fit", "", fc.deterministic);
            man.add("input", f_input);
            man.add("intercept", f_intercept ? "true" : "false");
            man.add("n_points", std::to_string(pts.size()));
            man.write(*os);
            *os << "slope,sigma_slope,intercept,sigma_intercept,n_iterations\n";
            *os << csv_num(res.slope) << "," << csv_num(res.sigma_slope) << ",";
            if (res.has_intercept)
                *os << csv_num(res.intercept) << "," << csv_num(res.sigma_intercept);
            else
                *os << ",";
            *os << "," << res.iterations << "\n";
            return 0;
        }
    } catch (const srs::ResonanceError& e) {
        std::cerr << "error (resonance guard band): " << e.what() << "\n";
        return 3;
    } catch (const srs::ConvergenceError& e) {
        std::cerr << "error (non-convergence): " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include "weylsector/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylsector/errors.hpp"
#include "weylsector/expression.hpp"
#include "weylsector/gauge_structure.hpp"
#include "weylsector/gns.hpp"
#include "weylsector/spectra.hpp"
#include "weylsector/symmetry.hpp"

namespace weylsector {

namespace {

using nlohmann::json;

constexpr int kSignificantDigits = 12;

// Rounds to 12 significant digits; the JSON writer then prints the shortest
// representation of the rounded double.
double round12(double x) {
    if (!std::isfinite(x)) throw NumericalError("non-finite value in output");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string csv_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, round12(x));
    return buf;
}

json complex_json(Complex c) { return json{{"re", round12(c.real())}, {"im", round12(c.imag())}}; }

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) throw InputError("empty entry in list '" + text + "'");
        out.push_back(item);
    }
    if (out.empty()) throw InputError("empty list");
    return out;
}

struct Options {
    std::string preset = "circle";
    bool csv = false;
    bool radians = false;

    double theta = 0.0;
    std::string element;
    std::string lambdas = "0";
    std::string lambda = "1/2";
    std::string b0 = "0";
    std::size_t dim = 0;
    std::string q;
    double mass = 1.0;
    int levels = 5;
    double a = 1.0;
    std::string potential;
    int theta_grid = kDefaultThetaGrid;
    int bands = 5;
    int ntrunc = kDefaultTruncation;
};

class Commands {
public:
    Commands(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    void structure_show() {
        auto s = preset(o_.preset);
        if (o_.csv) {
            out_ << "dim,name,kappa,xi,lattice\n";
            for (std::size_t i = 0; i < s.dims(); ++i) {
                const auto& d = s.dim(i);
                out_ << i << "," << d.name << "," << csv_num(d.kappa) << "," << csv_num(d.xi) << ","
                     << d.lattice.str() << "\n";
            }
            return;
        }
        json dims = json::array();
        for (const auto& d : s.dimensions()) {
            dims.push_back({{"name", d.name},
                            {"kappa", round12(d.kappa)},
                            {"xi", round12(d.xi)},
                            {"kappa_symbol", d.kappa_symbol},
                            {"xi_symbol", d.xi_symbol},
                            {"observable_u", d.lattice.str()}});
        }
        json gens = json::array();
        for (const auto& g : s.gauge_generators()) {
            gens.push_back({{"dim", g.dim},
                            {"label", g.label.str()},
                            {"physical", s.physical(g.label)},
                            {"continuous", g.continuous}});
        }
        emit({{"structure", s.name()}, {"dims", dims}, {"gauge_generators", gens}, {"center_generators", gens}});
    }

    void expect_cmd() {
        auto state = make_state();
        auto a = element_for(o_.element, state.structure());
        auto value = expect(state, a);
        if (o_.csv) {
            out_ << "re,im\n" << csv_num(value.real()) << "," << csv_num(value.imag()) << "\n";
            return;
        }
        emit({{"element", format_element(a)}, {"theta_turns", theta_json(state)}, {"value", complex_json(value)}});
    }

    void nonregularity() {
        auto state = make_state();
        auto a = element_for(o_.element, state.structure());
        std::vector<Rational> lambdas;
        for (const auto& item : split_list(o_.lambdas)) lambdas.push_back(Rational::parse(item));
        check_dim(state.structure());
        auto rows = nonregularity_scan(state, a, lambdas, o_.dim);
        if (o_.csv) {
            out_ << "lambda,re,im\n";
            for (const auto& r : rows)
                out_ << r.lambda.str() << "," << csv_num(r.value.real()) << "," << csv_num(r.value.imag()) << "\n";
            return;
        }
        json table = json::array();
        for (const auto& r : rows) table.push_back({{"lambda", r.lambda.str()}, {"value", complex_json(r.value)}});
        emit({{"element", format_element(a)}, {"theta_turns", theta_json(state)}, {"dim", o_.dim}, {"rows", table}});
    }

    void symmetry_check() {
        auto s = preset(o_.preset);
        check_dim(s);
        auto beta = adjoint_automorphism(
            WeylLabel::in_dim(o_.dim, Rational::parse(o_.lambda), Rational::parse(o_.b0)));
        auto verdict = is_broken(beta, s);
        if (o_.csv) {
            out_ << "center,theta_turns,before_re,before_im,after_re,after_im\n";
            for (const auto& smp : verdict.order_parameter_samples)
                out_ << s.physical(smp.center) << "," << csv_num(smp.theta_turns) << "," << csv_num(smp.before.real())
                     << "," << csv_num(smp.before.imag()) << "," << csv_num(smp.after.real()) << ","
                     << csv_num(smp.after.imag()) << "\n";
            return;
        }
        json samples = json::array();
        for (const auto& smp : verdict.order_parameter_samples)
            samples.push_back({{"center", s.physical(smp.center)},
                               {"theta_turns", round12(smp.theta_turns)},
                               {"before", complex_json(smp.before)},
                               {"after", complex_json(smp.after)}});
        emit({{"automorphism", beta.describe()},
              {"broken", verdict.broken},
              {"sector_shift", verdict.sector_shift.str()},
              {"witness", verdict.witness ? json(s.physical(*verdict.witness)) : json(nullptr)},
              {"witness_label", verdict.witness ? json(verdict.witness->str()) : json(nullptr)},
              {"order_parameter", samples}});
    }

    void ward() {
        auto state = make_state();
        const auto& s = state.structure();
        auto q = element_for(o_.q, s);
        auto report = ward_obstruction(state, q, s);
        if (o_.csv) {
            out_ << "term,sector_shift\n";
            for (const auto& [term, shift] : report.term_shifts) out_ << term.str() << "," << shift.str() << "\n";
            return;
        }
        json shifts = json::array();
        for (const auto& [term, shift] : report.term_shifts)
            shifts.push_back({{"term", term.str()}, {"sector_shift", shift.str()}});
        json phases = json::array();
        for (const auto& p : report.central_phases)
            phases.push_back({{"term", p.term.str()}, {"center", s.physical(p.center)}, {"turns", p.phase.turns().str()}});
        json anomalies = json::array();
        for (const auto& an : report.anomalies)
            anomalies.push_back({{"center", s.physical(an.center)}, {"value", complex_json(an.value)}});
        emit({{"Q", format_element(q)},
              {"observable", report.observable},
              {"self_adjoint", report.self_adjoint},
              {"term_shifts", shifts},
              {"central_phases", phases},
              {"anomalies", anomalies},
              {"fixes_all_sectors", report.fixes_all_sectors}});
    }

    void spectrum_circle() {
        if (o_.levels < 1) throw InputError("--levels must be >= 1");
        double t = theta_turns();
        auto r = circle_spectrum(t, o_.mass, o_.levels);
        r.levels.resize(static_cast<std::size_t>(o_.levels));
        if (o_.csv) {
            out_ << "theta_turns,level_index,energy\n";
            for (std::size_t i = 0; i < r.levels.size(); ++i)
                out_ << csv_num(t) << "," << i << "," << csv_num(r.levels[i]) << "\n";
            return;
        }
        json levels = json::array();
        for (double e : r.levels) levels.push_back(round12(e));
        emit({{"theta_turns", round12(t)}, {"mass", round12(o_.mass)}, {"levels", levels}, {"gap", round12(r.gap)}});
    }

    void spectrum_bloch() {
        auto v = o_.potential.empty() ? PotentialSpec::free(o_.a) : PotentialSpec::load(o_.potential, o_.a);
        auto results = bloch_bands(theta_grid(o_.theta_grid), v, o_.mass, o_.ntrunc, o_.bands);
        if (o_.csv) {
            out_ << "theta_turns,band_index,energy\n";
            for (const auto& r : results)
                for (std::size_t b = 0; b < r.levels.size(); ++b)
                    out_ << csv_num(r.theta_turns) << "," << b << "," << csv_num(r.levels[b]) << "\n";
            return;
        }
        json rows = json::array();
        for (const auto& r : results) {
            json levels = json::array();
            for (double e : r.levels) levels.push_back(round12(e));
            rows.push_back({{"theta_turns", round12(r.theta_turns)},
                            {"levels", levels},
                            {"gap", round12(r.gap)},
                            {"residual_max", round12(r.residual_max)}});
        }
        emit({{"a", round12(o_.a)}, {"mass", round12(o_.mass)}, {"ntrunc", o_.ntrunc}, {"bands", rows}});
    }

    void gap_report_cmd() {
        auto s = preset(o_.preset);
        std::optional<PotentialSpec> v;
        if (!o_.potential.empty()) v = PotentialSpec::load(o_.potential, s.dims() == 1 ? s.dim(0).xi : 1.0);
        auto r = gap_report(s, theta_turns(), v, o_.mass, Rational::parse(o_.lambda), o_.ntrunc);
        if (o_.csv) {
            out_ << "broken,sector_shift,theta_turns,E0,gap,conclusion\n"
                 << (r.broken ? "true" : "false") << "," << r.sector_shift.str() << "," << csv_num(r.theta_turns) << ","
                 << csv_num(r.ground_energy) << "," << csv_num(r.gap) << "," << r.conclusion << "\n";
            return;
        }
        emit({{"broken", r.broken},
              {"sector_shift", r.sector_shift.str()},
              {"witness", r.witness ? json(s.physical(*r.witness)) : json(nullptr)},
              {"theta_turns", round12(r.theta_turns)},
              {"E0", round12(r.ground_energy)},
              {"gap", round12(r.gap)},
              {"conclusion", r.conclusion}});
    }

private:
    const Options& o_;
    std::ostream& out_;

    void emit(json body) {
        body["schema"] = 1;
        out_ << body.dump(2) << "\n";
    }

    double theta_turns() const {
        if (!std::isfinite(o_.theta)) throw InputError("--theta must be finite");
        return o_.radians ? o_.theta / (2.0 * std::numbers::pi) : o_.theta;
    }

    ThetaState make_state() const {
        auto s = preset(o_.preset);
        return ThetaState(s, std::vector<double>(s.gauge_generators().size(), theta_turns()));
    }

    json theta_json(const ThetaState& state) const {
        json out = json::array();
        for (double t : state.theta_turns()) out.push_back(round12(t));
        return out;
    }

    void check_dim(const GaugeStructure& s) const {
        if (o_.dim >= s.dims())
            throw InputError("--dim " + std::to_string(o_.dim) + " is out of range for '" + s.name() + "'");
    }

    static AlgebraElement element_for(const std::string& text, const GaugeStructure& s) {
        auto a = parse_element(text);
        require_dims(a, s);
        return a;
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Superselection sectors of Weyl algebras: algebra, states, symmetries and spectra", "weylsector"};
    app.set_config("--config", "", "Read options from an INI/TOML file");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--preset", o.preset, "circle | bloch:a=<v> | two_body")->capture_default_str();
    app.add_flag("--csv", o.csv, "Emit CSV instead of JSON");
    app.add_flag("--radians", o.radians, "Read --theta in radians instead of turns");

    auto theta_opt = [&](CLI::App* c) { c->add_option("--theta", o.theta, "Sector angle (turns)")->capture_default_str(); };
    auto mass_opt = [&](CLI::App* c) { c->add_option("--mass", o.mass, "Particle mass")->capture_default_str(); };

    auto* structure = app.add_subcommand("structure", "Gauge structures");
    structure->require_subcommand(1);
    auto* structure_show = structure->add_subcommand("show", "Print a structure preset");

    auto* expect_cmd = app.add_subcommand("expect", "Evaluate the theta state on an element");
    theta_opt(expect_cmd);
    expect_cmd->add_option("--element", o.element, "Algebra element")->required();

    auto* nonreg = app.add_subcommand("nonregularity", "Scan lambda -> expectation of U(lambda*kappa)*A");
    theta_opt(nonreg);
    nonreg->add_option("--element", o.element, "Algebra element")->required();
    nonreg->add_option("--lambdas", o.lambdas, "Comma-separated rationals")->capture_default_str();
    nonreg->add_option("--dim", o.dim, "Dimension of U")->capture_default_str();

    auto* symmetry = app.add_subcommand("symmetry", "Symmetry breaking");
    symmetry->require_subcommand(1);
    auto* check = symmetry->add_subcommand("check", "Verdict for the adjoint action of W(lambda, b0)");
    check->add_option("--lambda", o.lambda, "u-label of the adjoint action")->required();
    check->add_option("--b0", o.b0, "b-label of the adjoint action")->capture_default_str();
    check->add_option("--dim", o.dim, "Dimension of the adjoint action")->capture_default_str();

    auto* ward = app.add_subcommand("ward", "Ward obstruction for an observable generator Q");
    theta_opt(ward);
    ward->add_option("--Q", o.q, "Self-adjoint observable element")->required();

    auto* spectrum = app.add_subcommand("spectrum", "Energy spectra per sector");
    spectrum->require_subcommand(1);
    auto* circle = spectrum->add_subcommand("circle", "Closed-form circle levels");
    theta_opt(circle);
    mass_opt(circle);
    circle->add_option("--levels", o.levels, "Number of levels")->capture_default_str();
    auto* bloch = spectrum->add_subcommand("bloch", "Plane-wave Bloch bands");
    bloch->add_option("--a", o.a, "Lattice period")->capture_default_str();
    bloch->add_option("--potential", o.potential, "Fourier coefficient file (m re im)");
    bloch->add_option("--theta-grid", o.theta_grid, "Number of theta points in [0,1)")->capture_default_str();
    bloch->add_option("--bands", o.bands, "Bands per theta")->capture_default_str();
    bloch->add_option("--ntrunc", o.ntrunc, "Plane-wave cutoff N")->capture_default_str();
    mass_opt(bloch);

    auto* gap = app.add_subcommand("gap-report", "Breaking verdict joined with the sector spectrum");
    theta_opt(gap);
    mass_opt(gap);
    gap->add_option("--lambda", o.lambda, "u-label of the adjoint action")->required();
    gap->add_option("--potential", o.potential, "Fourier coefficient file (m re im)");
    gap->add_option("--ntrunc", o.ntrunc, "Plane-wave cutoff N")->capture_default_str();

    for (auto* sub : {structure, symmetry, spectrum}) sub->fallthrough();
    for (auto* sub : {structure_show, expect_cmd, nonreg, check, ward, circle, bloch, gap}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    Commands cmd(o, out);
    try {
        if (structure_show->parsed()) cmd.structure_show();
        else if (expect_cmd->parsed()) cmd.expect_cmd();
        else if (nonreg->parsed()) cmd.nonregularity();
        else if (check->parsed()) cmd.symmetry_check();
        else if (ward->parsed()) cmd.ward();
        else if (circle->parsed()) cmd.spectrum_circle();
        else if (bloch->parsed()) cmd.spectrum_bloch();
        else if (gap->parsed()) cmd.gap_report_cmd();
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const RationalOverflow& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace weylsector

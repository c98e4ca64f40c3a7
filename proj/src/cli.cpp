// SPDX-License-Identifier: Apache-2.0
#include "csd/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csd/discord.hpp"
#include "csd/errors.hpp"
#include "csd/localops.hpp"
#include "csd/models.hpp"
#include "csd/oracle.hpp"
#include "csd/state_io.hpp"
#include "csd/states.hpp"

namespace csd {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* branch_name(DiscordBranch b) {
    return b == DiscordBranch::Z ? "Z" : "XY";
}

enum class Method { Analytic, Oracle, Both };

Method parse_method(const std::string& s) {
    if (s == "analytic") return Method::Analytic;
    if (s == "oracle") return Method::Oracle;
    return Method::Both;
}

Subsystem parse_measured(const std::string& s) {
    return s == "first" ? Subsystem::First : Subsystem::Second;
}

// State selection gathered from the command line. at overrides a and t.
struct FamilyArgs {
    std::string family;
    std::string file;
    int n = 20;
    double beta = 1.0;
    double a = 1.0;
    double t = 0.0;
    double at = 0.0;
    bool at_set = false;
    double j = 1.0;
    double jz = 1.0;
    double dx = 0.0;
    double alpha = 1.0;
    double pa = 0.7071067811865476;
    double pb = 0.0;
};

struct FamilyOptions {
    CLI::Option* file = nullptr;
    CLI::Option* n = nullptr;
    CLI::Option* beta = nullptr;
    CLI::Option* a = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* at = nullptr;
    CLI::Option* j = nullptr;
    CLI::Option* jz = nullptr;
    CLI::Option* dx = nullptr;
    CLI::Option* alpha = nullptr;
    CLI::Option* pa = nullptr;
    CLI::Option* pb = nullptr;
};

FamilyOptions add_family_options(CLI::App* cmd, FamilyArgs& fa, bool allow_file) {
    FamilyOptions o;
    std::string families = "nanopore, xxz-dm, pseudopure";
    if (allow_file) families += ", file";
    cmd->add_option("--family", fa.family, "state family (" + families + ")");
    if (allow_file)
        o.file = cmd->add_option("--file", fa.file, "state JSON file (implies --family file)");
    o.n = cmd->add_option("--N", fa.n, "chain length, >= 3 (nanopore)");
    o.beta = cmd->add_option("--beta", fa.beta, "inverse temperature (nanopore, xxz-dm)");
    o.a = cmd->add_option("--a", fa.a, "coupling strength (nanopore)");
    o.t = cmd->add_option("--t", fa.t, "evolution time (nanopore)");
    o.at = cmd->add_option("--at", fa.at, "coupling-time product a*t (nanopore)");
    o.j = cmd->add_option("--J", fa.j, "planar exchange (xxz-dm)");
    o.jz = cmd->add_option("--Jz", fa.jz, "axial exchange (xxz-dm)");
    o.dx = cmd->add_option("--Dx", fa.dx, "Dzyaloshinskii-Moriya coupling (xxz-dm)");
    o.alpha = cmd->add_option("--alpha", fa.alpha, "pure-state weight in [0, 1] (pseudopure)");
    o.pa = cmd->add_option("--pa", fa.pa, "amplitude on |00>+|11> (pseudopure)");
    o.pb = cmd->add_option("--pb", fa.pb, "amplitude on |01>+|10> (pseudopure)");
    o.at->excludes(o.a);
    o.at->excludes(o.t);
    return o;
}

// Fill defaults, reject flags that do not belong to the chosen family.
void resolve_family(FamilyArgs& fa, const FamilyOptions& o) {
    if (fa.family.empty() && o.file && o.file->count() > 0) fa.family = "file";
    if (fa.family.empty())
        throw DomainError("no state selected; pass --family or --file");
    if (fa.family != "nanopore" && fa.family != "xxz-dm" && fa.family != "pseudopure" &&
        fa.family != "file")
        throw DomainError("unknown family \"" + fa.family +
                          "\"; expected nanopore, xxz-dm, pseudopure, or file");
    if (fa.family == "file" && fa.file.empty())
        throw DomainError("--family file needs --file <path>");
    fa.at_set = o.at->count() > 0;

    struct Row {
        CLI::Option* opt;
        const char* flag;
        bool nano, xxz, pp, file;
    };
    const Row rows[] = {
        {o.file, "--file", false, false, false, true},
        {o.n, "--N", true, false, false, false},
        {o.beta, "--beta", true, true, false, false},
        {o.a, "--a", true, false, false, false},
        {o.t, "--t", true, false, false, false},
        {o.at, "--at", true, false, false, false},
        {o.j, "--J", false, true, false, false},
        {o.jz, "--Jz", false, true, false, false},
        {o.dx, "--Dx", false, true, false, false},
        {o.alpha, "--alpha", false, false, true, false},
        {o.pa, "--pa", false, false, true, false},
        {o.pb, "--pb", false, false, true, false},
    };
    for (const Row& r : rows) {
        if (!r.opt || r.opt->count() == 0) continue;
        const bool ok = (fa.family == "nanopore" && r.nano) || (fa.family == "xxz-dm" && r.xxz) ||
                        (fa.family == "pseudopure" && r.pp) || (fa.family == "file" && r.file);
        if (!ok)
            throw DomainError(std::string(r.flag) + " does not apply to family \"" + fa.family +
                              "\"");
    }
}

DensityMatrix build_state(const FamilyArgs& fa) {
    if (fa.family == "nanopore") {
        NanoporeSettings s;
        s.n = fa.n;
        s.beta = fa.beta;
        if (fa.at_set) {
            s.a = 1.0;
            s.t = fa.at;
        } else {
            s.a = fa.a;
            s.t = fa.t;
        }
        return nanopore_state(nanopore_correlations(s));
    }
    if (fa.family == "xxz-dm")
        return gibbs_state(xxz_dm_hamiltonian(fa.j, fa.jz, fa.dx), fa.beta);
    if (fa.family == "pseudopure") {
        PseudopureSettings s;
        s.alpha = fa.alpha;
        s.a = Cx(fa.pa, 0.0);
        s.b = Cx(fa.pb, 0.0);
        return pseudopure_state(s);
    }
    return validate_density(load_state(fa.file));
}

// Closed-form pipeline: recognize the pattern, rotate to an X state, strip the
// off-diagonal phases, then evaluate the two-branch formula. States whose
// phase-reduced diagonal lacks the equal middle pair fall outside the formula.
DiscordResult analytic_discord(const DensityMatrix& rho) {
    XParams xp{};
    if (cs_pattern_residual(rho.matrix()) <= 1e-10) {
        xp = cs_to_x_params(extract_cs(rho));
    } else if (x_pattern_residual(rho.matrix()) <= 1e-10) {
        xp = extract_x(rho);
    } else {
        throw AnalyticNotApplicable(
            "state is neither centrosymmetric nor X-shaped; rerun with --method oracle");
    }
    const XParams q = phase_reduce_x(xp).real_x;
    if (std::abs(q.q2 - q.q3) > 1e-10)
        throw AnalyticNotApplicable(
            "phase-reduced X state has unequal middle diagonal entries; rerun with --method "
            "oracle");
    const double q44 = 1.0 - q.q1 - q.q2 - q.q3;
    NanoporeFamilyParams f{};
    f.p = 0.5 * (q.q1 - q44);
    f.q = 0.25 - 0.5 * (q.q2 + q.q3);
    f.r = q.q6;
    // Encode the already-real outer off-diagonal: with phi = pi/4 the rotated
    // value is w = 2u, so u = q4 / 2 reproduces it.
    f.u = 0.5 * q.q4;
    f.phi = std::numbers::pi / 4.0;
    return discord_family(f);
}

void print_analytic(const DiscordResult& res, std::ostream& out) {
    out << "Q = " << fmt(res.q) << "\n"
        << "Q1 = " << fmt(res.q1) << "\n"
        << "Q2 = " << fmt(res.q2) << "\n"
        << "branch = " << branch_name(res.branch) << "\n"
        << "S = " << fmt(res.s) << "\n"
        << "Sr = " << fmt(res.sr) << "\n";
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    const CMat4 m = load_state(path);
    const double hres = hermiticity_residual(m);
    const double tres = std::abs(trace(m) - Cx(1.0, 0.0));
    const double csres = cs_pattern_residual(m);
    const double xres = x_pattern_residual(m);
    double mineig = std::numeric_limits<double>::quiet_NaN();
    if (hres <= 1e-10) mineig = herm_eig(m).eigenvalues[0];

    out << "hermiticity_residual = " << fmt(hres) << "\n"
        << "trace_residual = " << fmt(tres) << "\n"
        << "min_eigenvalue = " << fmt(mineig) << "\n"
        << "cs_residual = " << fmt(csres) << "\n"
        << "x_residual = " << fmt(xres) << "\n";

    std::string verdict = "valid";
    std::string detail;
    try {
        validate_density(m);
    } catch (const Error& e) {
        verdict = "invalid (" + e.kind() + ")";
        detail = e.kind() + ": " + e.what();
    }
    out << verdict << (csres <= 1e-10 ? "; CS" : "; not CS") << (xres <= 1e-10 ? "; X" : "; not X")
        << "\n";
    if (!detail.empty()) {
        err << "error: " << detail << "\n";
        return 1;
    }
    return 0;
}

int cmd_discord(const FamilyArgs& fa, Method method, Subsystem measured, std::ostream& out) {
    const DensityMatrix rho = build_state(fa);
    if (method == Method::Oracle) {
        const DiscordResult res = discord_numeric(rho, {}, measured);
        out << "Q_oracle = " << fmt(res.q) << "\n"
            << "S = " << fmt(res.s) << "\n"
            << "Sr = " << fmt(res.sr) << "\n";
        return 0;
    }
    const DiscordResult ana = analytic_discord(rho);
    print_analytic(ana, out);
    if (method == Method::Both) {
        const DiscordResult ora = discord_numeric(rho, {}, measured);
        out << "Q_oracle = " << fmt(ora.q) << "\n"
            << "gap = " << fmt(std::abs(ana.q - ora.q)) << "\n";
    }
    return 0;
}

FamilyArgs with_value(FamilyArgs fa, const std::string& param, double v) {
    if (param == "at") {
        fa.at = v;
        fa.at_set = true;
    } else if (param == "beta") {
        fa.beta = v;
    } else if (param == "J") {
        fa.j = v;
    } else if (param == "Jz") {
        fa.jz = v;
    } else if (param == "Dx") {
        fa.dx = v;
    } else if (param == "alpha") {
        fa.alpha = v;
    }
    return fa;
}

std::vector<CLI::Option*> pinning_options(const std::string& param, const FamilyOptions& o) {
    if (param == "at") return {o.at, o.a, o.t};
    if (param == "beta") return {o.beta};
    if (param == "J") return {o.j};
    if (param == "Jz") return {o.jz};
    if (param == "Dx") return {o.dx};
    if (param == "alpha") return {o.alpha};
    return {};
}

int cmd_sweep(const FamilyArgs& fa, const FamilyOptions& o, const std::string& param, double from,
              double to, int points, Method method, Subsystem measured,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
    static const std::map<std::string, std::vector<std::string>> kSweepable = {
        {"nanopore", {"at", "beta"}},
        {"xxz-dm", {"beta", "J", "Jz", "Dx"}},
        {"pseudopure", {"alpha"}},
    };
    if (fa.family == "file")
        throw DomainError("sweep needs a parametric family, not a file state");
    const auto& allowed = kSweepable.at(fa.family);
    if (std::find(allowed.begin(), allowed.end(), param) == allowed.end()) {
        std::string list;
        for (const std::string& s : allowed) list += (list.empty() ? "" : ", ") + s;
        throw DomainError("family \"" + fa.family + "\" cannot sweep \"" + param +
                          "\"; choose one of " + list);
    }
    for (CLI::Option* opt : pinning_options(param, o))
        if (opt && opt->count() > 0)
            throw DomainError(opt->get_name() + " conflicts with sweeping " + param);
    if (points < 2) throw DomainError("--points must be at least 2");
    if (!(from < to)) throw DomainError("--from must be less than --to");

    std::ofstream file_out;
    std::ostream* os = &out;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) throw ParseError("cannot write " + out_path);
        os = &file_out;
    }

    *os << "param,Q,Q1,Q2,branch,S,Sr" << (method == Method::Both ? ",Q_oracle" : "") << "\n";
    for (int k = 0; k < points; ++k) {
        const double v = from + (to - from) * static_cast<double>(k) / (points - 1);
        std::string row = fmt(v);
        try {
            const DensityMatrix rho = build_state(with_value(fa, param, v));
            std::optional<DiscordResult> ana;
            std::optional<DiscordResult> ora;
            if (method != Method::Oracle) ana = analytic_discord(rho);
            if (method != Method::Analytic) ora = discord_numeric(rho, {}, measured);
            const DiscordResult& main = (method == Method::Oracle) ? *ora : *ana;
            row += "," + fmt(main.q) + "," + fmt(main.q1) + "," + fmt(main.q2) + "," +
                   branch_name(main.branch) + "," + fmt(main.s) + "," + fmt(main.sr);
            if (method == Method::Both) row += "," + fmt(ora->q);
        } catch (const Error& e) {
            err << "note: " << param << " = " << fmt(v) << ": " << e.kind() << ": " << e.what()
                << "\n";
            row += ",nan,nan,nan,-,nan,nan";
            if (method == Method::Both) row += ",nan";
        }
        *os << row << "\n";
    }
    return 0;
}

int cmd_make_state(const FamilyArgs& fa, const std::string& out_path) {
    if (fa.family == "file")
        throw DomainError("make-state needs a parametric family, not a file state");
    const DensityMatrix rho = build_state(fa);
    save_state(out_path, rho.matrix());
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum discord for centrosymmetric and X-shaped two-qubit states"};
    app.name("csdiscord");
    app.require_subcommand(1);

    CLI::App* vsub = app.add_subcommand("validate", "check a state file, report residuals");
    std::string vfile;
    vsub->add_option("file", vfile, "state JSON file")->required();

    CLI::App* dsub = app.add_subcommand("discord", "quantum discord of one state");
    FamilyArgs dargs;
    FamilyOptions dopts = add_family_options(dsub, dargs, true);
    std::string dmethod = "analytic";
    std::string dmeasured = "second";
    dsub->add_option("--method", dmethod, "analytic, oracle, or both")
        ->check(CLI::IsMember({"analytic", "oracle", "both"}))
        ->capture_default_str();
    dsub->add_option("--measured", dmeasured, "measured subsystem for the oracle")
        ->check(CLI::IsMember({"first", "second"}))
        ->capture_default_str();

    CLI::App* ssub = app.add_subcommand("sweep", "discord along one model parameter, CSV output");
    FamilyArgs sargs;
    FamilyOptions sopts = add_family_options(ssub, sargs, false);
    std::string sparam;
    double sfrom = 0.0;
    double sto = 0.0;
    int spoints = 0;
    std::string smethod = "analytic";
    std::string smeasured = "second";
    std::string sout;
    ssub->add_option("--sweep", sparam, "parameter to sweep (at, beta, J, Jz, Dx, alpha)")
        ->required();
    ssub->add_option("--from", sfrom, "first parameter value")->required();
    ssub->add_option("--to", sto, "last parameter value")->required();
    ssub->add_option("--points", spoints, "grid size, >= 2")->required();
    ssub->add_option("--method", smethod, "analytic, oracle, or both")
        ->check(CLI::IsMember({"analytic", "oracle", "both"}))
        ->capture_default_str();
    ssub->add_option("--measured", smeasured, "measured subsystem for the oracle")
        ->check(CLI::IsMember({"first", "second"}))
        ->capture_default_str();
    ssub->add_option("--out", sout, "CSV path (default stdout)");

    CLI::App* msub = app.add_subcommand("make-state", "write a model state to a JSON file");
    FamilyArgs margs;
    FamilyOptions mopts = add_family_options(msub, margs, false);
    std::string mout;
    msub->add_option("--out", mout, "output JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: ParseError: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*vsub) return cmd_validate(vfile, out, err);
        if (*dsub) {
            resolve_family(dargs, dopts);
            return cmd_discord(dargs, parse_method(dmethod), parse_measured(dmeasured), out);
        }
        if (*ssub) {
            resolve_family(sargs, sopts);
            return cmd_sweep(sargs, sopts, sparam, sfrom, sto, spoints, parse_method(smethod),
                             parse_measured(smeasured), sout, out, err);
        }
        if (*msub) {
            resolve_family(margs, mopts);
            return cmd_make_state(margs, mout);
        }
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: Unexpected: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace csd

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "qising/classical.hpp"
#include "qising/fractal.hpp"
#include "qising/json_out.hpp"
#include "qising/leeyang.hpp"
#include "qising/parallel.hpp"
#include "qising/quantum.hpp"
#include "qising/sequences.hpp"
#include "qising/trace_map.hpp"
#include "qising/validate.hpp"

namespace jo = qising::jsonout;
namespace tmap = qising::tracemap;
namespace qu = qising::quantum;
namespace cl = qising::classical;
namespace ly = qising::leeyang;
namespace fr = qising::fractal;

namespace {

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::fputs(content.c_str(), stdout);
    else
        jo::write_atomic(out_path, content);
}

jo::Array band_array(const qising::BandSet& b) {
    jo::Array a;
    for (const auto& iv : b.intervals()) a.push_back(jo::Array{iv.lo, iv.hi});
    return a;
}

int run_orbit(double x, double y, double z, int n_max, double bound,
              const std::string& out) {
    auto o = tmap::iterate_orbit({x, y, z}, n_max, bound);
    jo::Object params{{"x", x}, {"y", y}, {"z", z}, {"n_max", n_max}, {"bound", bound}};
    jo::Object doc;
    doc["params"] = params;
    doc["status"] = o.status == tmap::OrbitStatus::Escaped ? "escaped" : "bounded";
    doc["escape_index"] =
        o.escape_index ? jo::Value(std::int64_t(*o.escape_index)) : jo::Value(nullptr);
    doc["certified"] = o.certified;
    if (o.status == tmap::OrbitStatus::Escaped && o.certified)
        doc["rate"] = tmap::escape_rate({x, y, z}, 1e-10);
    else
        doc["rate"] = nullptr;
    emit(out, jo::dump(doc));
    return 0;
}

int run_spectrum(double pa, double pb, int gen, int grid, int orbit_cap,
                 int parallelism, const std::string& out) {
    qu::SpectrumParams p;
    p.couplings = {pa, pb, 0, 0};
    p.generation = gen;
    p.grid_resolution = grid;
    p.orbit_cap = orbit_cap;
    p.parallelism = parallelism;
    auto s = qu::sigma_k(p);
    const double jmax = std::max(pa, pb);
    jo::Object doc;
    doc["params"] = jo::Object{{"pa", pa},       {"pb", pb},
                               {"gen", gen},     {"grid", grid},
                               {"orbit_cap", orbit_cap}, {"parallelism", parallelism}};
    doc["bands"] = band_array(s.lambda_bands);
    doc["x_bands"] = band_array(s.x_bands);
    doc["band_count"] = std::int64_t(s.x_bands.size());
    doc["grid_step"] = ((1.0 + jmax) * (1.0 + jmax) + 0.5) / grid;
    emit(out, jo::dump(doc));
    return 0;
}

int run_free_energy(double pa, double pb, double qa, double qb, double tau_min,
                    double tau_max, int tau_steps, double tol, double offset,
                    int parallelism, const std::string& out) {
    qising::sequences::CouplingMap c{pa, pb, qa, qb};
    std::vector<cl::FreeEnergyResult> res(tau_steps);
    std::vector<double> taus(tau_steps);
    for (int i = 0; i < tau_steps; ++i)
        taus[i] = tau_steps == 1 ? tau_min
                                 : tau_min + (tau_max - tau_min) * i / (tau_steps - 1.0);
    qising::parallel_for_chunks(tau_steps, parallelism, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i)
            res[i] = cl::free_energy_limit(c, taus[i], tol, offset);
    });
    std::string csv = jo::csv_row({"tau", "F", "n_used", "cauchy_gap"});
    for (int i = 0; i < tau_steps; ++i)
        csv += jo::csv_row({jo::format_double(taus[i]), jo::format_double(res[i].value),
                            std::to_string(res[i].n_used),
                            jo::format_double(res[i].cauchy_gap)});
    emit(out, csv);
    return 0;
}

int run_lee_yang(double pa, double pb, double tau, int gen, int grid, bool oracle,
                 int parallelism, const std::string& out) {
    auto f = ly::FugacityParams::from_couplings(pa, pb, tau);
    ly::ZeroSetOptions opt{grid, parallelism};
    auto zs = ly::zero_set(gen, f, opt);
    jo::Object doc;
    doc["params"] = jo::Object{{"pa", pa},   {"pb", pb},     {"tau", tau},
                               {"gen", gen}, {"grid", grid}, {"oracle", oracle}};
    jo::Array zeros, angles, flags;
    for (double p : zs.points()) zeros.push_back(p);
    for (double a : ly::to_circle(zs)) angles.push_back(a);
    for (double p : zs.flagged) flags.push_back(p);
    doc["zeros_eta_tilde"] = std::move(zeros);
    doc["angles"] = std::move(angles);
    doc["flagged_tangencies"] = std::move(flags);
    if (oracle) {
        auto orc = ly::zero_set_oracle(gen, f);
        doc["oracle_hdist"] = qising::hausdorff_distance(zs, orc);
    } else {
        doc["oracle_hdist"] = nullptr;
    }
    emit(out, jo::dump(doc));
    return 0;
}

int run_dims(const std::string& in, double eps_min, double eps_max, int levels,
             int windows, const std::string& out) {
    std::ifstream f(in);
    if (!f) throw std::runtime_error("cannot open " + in);
    nlohmann::json doc = nlohmann::json::parse(f);
    if (!doc.contains("bands")) throw std::runtime_error("input has no \"bands\" field");
    std::vector<qising::Interval> iv;
    for (const auto& b : doc["bands"])
        iv.push_back({b.at(0).get<double>(), b.at(1).get<double>()});
    qising::BandSet bands(std::move(iv));

    auto dim = fr::box_counting(bands, eps_min, eps_max, levels);
    auto th = fr::thickness(bands);
    jo::Object dim_o{{"slope", dim.slope},
                     {"intercept", dim.intercept},
                     {"r_squared", dim.r_squared},
                     {"eps_min", dim.eps_min},
                     {"eps_max", dim.eps_max},
                     {"levels_used", std::int64_t(dim.levels_used)}};
    jo::Object th_o{{"tau", th.tau}, {"nu", th.nu},
                    {"gap_count", std::int64_t(th.gaps.size())}};
    jo::Array profile;
    for (const auto& [center, est] : fr::local_dimension_profile(bands, windows))
        profile.push_back(jo::Object{{"center", center},
                                     {"slope", est.slope},
                                     {"r_squared", est.r_squared}});
    jo::Object root;
    root["params"] = jo::Object{{"in", in},
                                {"eps_min", eps_min},
                                {"eps_max", eps_max},
                                {"levels", std::int64_t(levels)},
                                {"windows", std::int64_t(windows)}};
    root["dimension"] = std::move(dim_o);
    root["thickness"] = std::move(th_o);
    root["lower_bound"] = fr::dimension_lower_bound(th);
    root["profile"] = std::move(profile);
    emit(out, jo::dump(root));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-periodic Ising laboratory"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file");

    int parallelism = 1;
    std::uint64_t seed = 12345;
    app.add_option("--parallelism", parallelism, "worker count")
        ->envname("QISING_PARALLELISM")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized validation instances");

    // orbit
    auto* orbit = app.add_subcommand("orbit", "classify a trace-map orbit");
    double ox = 0, oy = 0, oz = 0, obound = 1e6;
    int on_max = 2000;
    std::string oout;
    orbit->add_option("--x", ox)->required();
    orbit->add_option("--y", oy)->required();
    orbit->add_option("--z", oz)->required();
    orbit->add_option("--n-max", on_max);
    orbit->add_option("--bound", obound);
    orbit->add_option("--out", oout);

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "period-F_k spectrum approximant");
    double spa = 1.0, spb = 1.2;
    int sgen = 8, sgrid = 20000, scap = 2000;
    std::string sout;
    spec->add_option("--pa", spa);
    spec->add_option("--pb", spb);
    spec->add_option("--gen", sgen);
    spec->add_option("--grid", sgrid);
    spec->add_option("--orbit-cap", scap);
    spec->add_option("--out", sout);

    // free-energy
    auto* fe = app.add_subcommand("free-energy", "free energy over a temperature grid");
    double fpa = 1.0, fpb = 1.2, fqa = 0, fqb = 0, ftmin = 0.5, ftmax = 5.0,
           ftol = 1e-8, foff = 0.0;
    int ftsteps = 20;
    std::string fout;
    fe->add_option("--pa", fpa);
    fe->add_option("--pb", fpb);
    fe->add_option("--qa", fqa);
    fe->add_option("--qb", fqb);
    fe->add_option("--tau-min", ftmin);
    fe->add_option("--tau-max", ftmax);
    fe->add_option("--tau-steps", ftsteps);
    fe->add_option("--tol", ftol);
    fe->add_option("--offset", foff);
    fe->add_option("--out", fout);

    // lee-yang
    auto* lee = app.add_subcommand("lee-yang", "Lee-Yang zero set");
    double lpa = 1.0, lpb = 1.2, ltau = 1.0;
    int lgen = 8, lgrid = 20000;
    bool loracle = false;
    std::string lout;
    lee->add_option("--pa", lpa);
    lee->add_option("--pb", lpb);
    lee->add_option("--tau", ltau);
    lee->add_option("--gen", lgen);
    lee->add_option("--grid", lgrid);
    lee->add_flag("--oracle", loracle);
    lee->add_option("--out", lout);

    // dims
    auto* dims = app.add_subcommand("dims", "fractal analysis of a band-set file");
    std::string din, dout;
    double deps_min = 1e-4, deps_max = 0.2;
    int dlevels = 10, dwindows = 8;
    dims->add_option("--in", din)->required();
    dims->add_option("--eps-min", deps_min);
    dims->add_option("--eps-max", deps_max);
    dims->add_option("--levels", dlevels);
    dims->add_option("--windows", dwindows);
    dims->add_option("--out", dout);

    auto* val = app.add_subcommand("validate", "run the acceptance suite");
    auto* valc = app.add_subcommand("validate-classical",
                                    "run the classical oracle/trace-identity suite");
    for (auto* sub : {orbit, spec, fe, lee, dims, val, valc})
        sub->fallthrough();  // global flags (--seed, --parallelism) after the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*orbit) return run_orbit(ox, oy, oz, on_max, obound, oout);
        if (*spec) return run_spectrum(spa, spb, sgen, sgrid, scap, parallelism, sout);
        if (*fe)
            return run_free_energy(fpa, fpb, fqa, fqb, ftmin, ftmax, ftsteps, ftol, foff,
                                   parallelism, fout);
        if (*lee) return run_lee_yang(lpa, lpb, ltau, lgen, lgrid, loracle, parallelism, lout);
        if (*dims) return run_dims(din, deps_min, deps_max, dlevels, dwindows, dout);
        if (*val)
            return qising::validate::report(qising::validate::run_all(seed, parallelism))
                       ? 0
                       : 1;
        if (*valc)
            return qising::validate::report(
                       qising::validate::run_classical(seed, parallelism))
                       ? 0
                       : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

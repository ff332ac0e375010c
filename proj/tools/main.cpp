// coneatoms command-line interface.
//
// Subcommands: gate | demo | compare | lattice | norms
// Flags: --config PATH, --out DIR, --seed INT (overrides config).
// Exit codes: 0 ok, 2 parameter-gate refusal, 3 numerical non-convergence,
// 64 usage/config error. Outputs are deterministic for a fixed config and
// seed; every output file carries the config hash in its metadata line.

#include "CLI11.hpp"
#include "json.hpp"

#include "coneatoms/besov.hpp"
#include "coneatoms/crcompare.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

using namespace coneatoms;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string cone = "halfline";
    double grid_L = 16.0;
    int grid_N = 1024;
    double delta = 0.5;
    double lambda = 2.0;
    Region region{std::exp(-1.0), std::exp(1.0), 4.0};
    Region partition_region{std::exp(-3.5), std::exp(3.5), 8.0};
    ParamSet params{2.0, 2.0, 1.0};
    double spatial_step = 1.5;
    double mother_radius = 1.3;
    double tol = 1e-4;
    int max_iter = 200;
    double t_min = 1e-3;
    double t_max = 20.0;
    int n_t = 60;
    int n_alpha = 3;
    int n_omega = 6;
    std::uint64_t seed = 42;
    std::string out = "out";
    std::vector<double> p_values; // compare sweep; empty-but-set is honored
    bool p_values_given = false;
};

RunConfig demo_defaults(const std::string& name) {
    RunConfig cfg;
    if (name == "uhp") {
        return cfg;
    }
    if (name == "lightcone" || name == "spd") {
        cfg.cone = name == "lightcone" ? "lorentz:3" : "spd:2";
        // spd bands spread further in the packed coordinates; same dw,
        // larger box
        cfg.grid_L = name == "spd" ? 16.0 : 8.0;
        cfg.grid_N = name == "spd" ? 64 : 32;
        cfg.region = Region{0.4, 2.5, 1.2};
        cfg.partition_region = Region{0.05, 20.0, 3.8};
        cfg.params = ParamSet{2.0, 2.0, 2.0};
        cfg.t_min = 1e-2;
        cfg.t_max = 8.0;
        cfg.n_t = 8;
        return cfg;
    }
    throw std::invalid_argument("unknown demo name: " + name);
}

Region region_from(const json& j, const Region& fallback) {
    Region r = fallback;
    r.det_min = j.value("det_min", r.det_min);
    r.det_max = j.value("det_max", r.det_max);
    r.radius_max = j.value("radius_max", r.radius_max);
    return r;
}

void load_config(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    json j = json::parse(in);
    cfg.cone = j.value("cone", cfg.cone);
    if (j.contains("grid")) {
        cfg.grid_L = j["grid"].value("L", cfg.grid_L);
        cfg.grid_N = j["grid"].value("N", cfg.grid_N);
    }
    if (j.contains("lattice")) {
        const json& l = j["lattice"];
        cfg.delta = l.value("delta", cfg.delta);
        cfg.lambda = l.value("lambda", cfg.lambda);
        if (l.contains("region")) cfg.region = region_from(l["region"], cfg.region);
        if (l.contains("partition_region"))
            cfg.partition_region =
                region_from(l["partition_region"], cfg.partition_region);
    }
    if (j.contains("params")) {
        cfg.params.p = j["params"].value("p", cfg.params.p);
        cfg.params.q = j["params"].value("q", cfg.params.q);
        cfg.params.nu = j["params"].value("nu", cfg.params.nu);
    }
    if (j.contains("atom")) {
        const json& a = j["atom"];
        cfg.spatial_step = a.value("spatial_step", cfg.spatial_step);
        cfg.mother_radius = a.value("mother_radius", cfg.mother_radius);
        cfg.tol = a.value("tol", cfg.tol);
        cfg.max_iter = a.value("max_iter", cfg.max_iter);
    }
    if (j.contains("tube")) {
        const json& t = j["tube"];
        cfg.t_min = t.value("t_min", cfg.t_min);
        cfg.t_max = t.value("t_max", cfg.t_max);
        cfg.n_t = t.value("n_t", cfg.n_t);
        cfg.n_alpha = t.value("n_alpha", cfg.n_alpha);
        cfg.n_omega = t.value("n_omega", cfg.n_omega);
    }
    cfg.seed = j.value("seed", cfg.seed);
    cfg.out = j.value("out", cfg.out);
    if (j.contains("p_values")) {
        cfg.p_values = j["p_values"].get<std::vector<double>>();
        cfg.p_values_given = true;
    }
}

std::string canonical(const RunConfig& cfg) {
    json j;
    j["cone"] = cfg.cone;
    j["grid"] = {{"L", cfg.grid_L}, {"N", cfg.grid_N}};
    j["lattice"] = {
        {"delta", cfg.delta},
        {"lambda", cfg.lambda},
        {"region",
         {{"det_min", cfg.region.det_min},
          {"det_max", cfg.region.det_max},
          {"radius_max", cfg.region.radius_max}}},
        {"partition_region",
         {{"det_min", cfg.partition_region.det_min},
          {"det_max", cfg.partition_region.det_max},
          {"radius_max", cfg.partition_region.radius_max}}}};
    j["params"] = {{"p", cfg.params.p}, {"q", cfg.params.q}, {"nu", cfg.params.nu}};
    j["atom"] = {{"spatial_step", cfg.spatial_step},
                 {"mother_radius", cfg.mother_radius},
                 {"tol", cfg.tol},
                 {"max_iter", cfg.max_iter}};
    j["tube"] = {{"t_min", cfg.t_min},
                 {"t_max", cfg.t_max},
                 {"n_t", cfg.n_t},
                 {"n_alpha", cfg.n_alpha},
                 {"n_omega", cfg.n_omega}};
    j["seed"] = cfg.seed;
    if (cfg.p_values_given) j["p_values"] = cfg.p_values;
    return j.dump();
}

std::string config_hash(const RunConfig& cfg) {
    // FNV-1a, 64-bit
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical(cfg)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::ofstream open_out(const RunConfig& cfg, const std::string& file) {
    std::filesystem::create_directories(cfg.out);
    std::ofstream os(std::filesystem::path(cfg.out) / file);
    if (!os) throw std::runtime_error("cannot write " + file);
    return os;
}

GridFunction band_limited(const ConeDescriptor& cone, const FrequencyGrid& grid,
                          const ConeLattice& lat, double radius,
                          std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cd> spec(grid.size(), cd(0.0, 0.0));
    for (const Vec& y : lat.points) {
        cd c(rng.normal(), rng.normal());
        GroupElement h = factorize(cone, y);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Vec w = grid.freq_point(i);
            if (!contains(cone, w)) continue;
            double d = distance_from_e(cone, act_transpose(cone, h, w));
            if (d < radius) spec[i] += c * bump(d / radius);
        }
    }
    return from_spectrum(grid, std::move(spec));
}

int cmd_gate(const RunConfig& cfg) {
    ConeDescriptor cone = parse_cone(cfg.cone);
    IndexReport rep = index_gate(cone, cfg.params);
    std::cout << rep.to_json() << "\n";
    std::ofstream os = open_out(cfg, "gate.json");
    os << "{\"config_hash\":\"" << config_hash(cfg) << "\",\"report\":"
       << rep.to_json() << "}\n";
    return rep.atomic_ok ? 0 : 2;
}

int cmd_demo(const RunConfig& cfg, const std::string& name) {
    ConeDescriptor cone = parse_cone(cfg.cone);
    IndexReport rep = index_gate(cone, cfg.params);
    if (!rep.atomic_ok) {
        std::cerr << "gate refused: " << rep.to_json() << "\n";
        return 2;
    }
    const std::string hash = config_hash(cfg);
    FrequencyGrid grid = make_grid(cone.n, cfg.grid_N, cfg.grid_L);
    ConeLattice lat = build_lattice(cone, cfg.delta, cfg.lambda, cfg.region,
                                    cfg.seed);
    ConeLattice plat = build_lattice(cone, cfg.delta, cfg.lambda,
                                     cfg.partition_region, cfg.seed);
    Partition part = build_partition(cone, plat, grid);
    MotherWavelet mother;
    mother.radius = cfg.mother_radius;
    AtomSystem sys = build_atom_system(cone, lat, cfg.spatial_step, mother,
                                       grid, cfg.seed);
    GridFunction f = band_limited(cone, grid, lat, 0.7 * cfg.mother_radius,
                                  cfg.seed + 1);
    TubeGridOptions opts;
    opts.t_min = cfg.t_min;
    opts.t_max = cfg.t_max;
    opts.n_t = cfg.n_t;
    opts.n_alpha = cfg.n_alpha;
    opts.n_omega = cfg.n_omega;
    TubeGrid tg = make_tube_grid(cone, grid, cfg.params.nu, opts);
    TubeFunction F = extend_full(cone, f, part, tg);
    CoeffSequence c = bergman_analyze(F, sys, cfg.tol, cfg.max_iter);
    if (c.residual > 10.0 * cfg.tol) {
        std::cerr << "frame inversion did not converge: residual "
                  << c.residual << " after " << c.iterations << " iterations\n";
        return 3;
    }
    TubeFunction G = bergman_synthesize(c.values, sys, part, tg);

    // per-height reconstruction error
    double num = 0.0, den = 0.0;
    {
        std::ofstream os = open_out(cfg, name + "_reconstruction.csv");
        os << "# config_hash=" << hash << "\n";
        os << "k,weight,abs_error,rel_error\n";
        char buf[128];
        for (std::size_t k = 0; k < tg.heights.size(); ++k) {
            GridFunction a = height_slice(F, k);
            GridFunction b = height_slice(G, k);
            double d = l2_norm(add(a, scale(b, cd(-1.0, 0.0))));
            double n = l2_norm(a);
            num += tg.weights[k] * d * d;
            den += tg.weights[k] * n * n;
            std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", k,
                          tg.weights[k], d, n > 0.0 ? d / n : 0.0);
            os << buf;
        }
    }
    double rel = den > 0.0 ? std::sqrt(num / den) : 0.0;

    double bf = bergman_norm(cone, F, cfg.params);
    double sn = sequence_norm(c.values, sys, cfg.params);
    double bg = bergman_norm(cone, G, cfg.params);
    {
        std::ofstream os = open_out(cfg, name + "_norm_ratio.csv");
        os << "# config_hash=" << hash << "\n";
        os << "quantity,value\n";
        char buf[128];
        auto row = [&](const char* k, double v) {
            std::snprintf(buf, sizeof buf, "%s,%.17g\n", k, v);
            os << buf;
        };
        row("bergman_norm_input", bf);
        row("sequence_norm", sn);
        row("bergman_norm_reconstruction", bg);
        row("ratio_coefficient", sn / bf);
        row("ratio_synthesis", bg / sn);
        double br = std::max(std::max(sn / bf, bf / sn),
                             std::max(bg / sn, sn / bg));
        row("bracket_C", br);
    }
    {
        std::ofstream os = open_out(cfg, name + "_coeffs.csv");
        os << "# config_hash=" << hash << "\n";
        write_coeffs_csv(os, sys, c.values);
    }
    {
        json meta;
        meta["config_hash"] = hash;
        meta["config"] = json::parse(canonical(cfg));
        meta["demo"] = name;
        meta["normalization_constant"] = 1.0; // unitary-transform convention
        meta["atoms"] = sys.total;
        meta["lattice_points"] = lat.points.size();
        meta["residual"] = c.residual;
        meta["iterations"] = c.iterations;
        meta["frame_lower"] = c.frame_lower;
        meta["frame_upper"] = c.frame_upper;
        meta["tube_rel_error"] = rel;
        std::ofstream os = open_out(cfg, name + "_metadata.json");
        os << meta.dump(2) << "\n";
    }
    std::cout << "demo " << name << ": residual " << c.residual << ", tube rel error "
              << rel << ", artifacts in " << cfg.out << "\n";
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    ConeDescriptor cone = parse_cone(cfg.cone);
    std::vector<double> ps;
    if (cfg.p_values_given)
        ps = cfg.p_values;
    else
        for (int k = 0; k <= 300; ++k) ps.push_back(1.0 + 0.01 * k);
    std::vector<RangeReport> reps = compare(cone, ps);
    std::ofstream os = open_out(cfg, "compare.csv");
    os << "# config_hash=" << config_hash(cfg) << "\n";
    write_compare_csv(os, reps);
    write_compare_csv(std::cout, reps);
    return 0;
}

int cmd_lattice(const RunConfig& cfg) {
    ConeDescriptor cone = parse_cone(cfg.cone);
    ConeLattice lat = build_lattice(cone, cfg.delta, cfg.lambda, cfg.region,
                                    cfg.seed);
    CoverageReport cov = verify_covering(cone, lat, 10000, cfg.seed + 1);
    std::ofstream os = open_out(cfg, "lattice.csv");
    os << "# config_hash=" << config_hash(cfg) << "\n";
    write_lattice_csv(os, cone, lat);
    std::cout << "points " << lat.points.size() << ", packing "
              << verify_packing(cone, lat) << ", covering " << cov.fraction
              << "\n";
    return 0;
}

int cmd_norms(const RunConfig& cfg) {
    ConeDescriptor cone = parse_cone(cfg.cone);
    IndexReport rep = index_gate(cone, cfg.params);
    if (!rep.atomic_ok) {
        std::cerr << "gate refused: " << rep.to_json() << "\n";
        return 2;
    }
    FrequencyGrid grid = make_grid(cone.n, cfg.grid_N, cfg.grid_L);
    ConeLattice lat = build_lattice(cone, cfg.delta, cfg.lambda, cfg.region,
                                    cfg.seed);
    ConeLattice plat = build_lattice(cone, cfg.delta, cfg.lambda,
                                     cfg.partition_region, cfg.seed);
    Partition part = build_partition(cone, plat, grid);
    MotherWavelet mother;
    mother.radius = cfg.mother_radius;
    AtomSystem sys = build_atom_system(cone, lat, cfg.spatial_step, mother,
                                       grid, cfg.seed);
    GridFunction f = band_limited(cone, grid, lat, 0.7 * cfg.mother_radius,
                                  cfg.seed + 1);
    CoeffSequence c = analyze(f, sys, cfg.tol, cfg.max_iter);
    if (c.residual > 10.0 * cfg.tol) {
        std::cerr << "frame inversion did not converge: residual "
                  << c.residual << "\n";
        return 3;
    }
    double bn = besov_norm(cone, f, part, cfg.params);
    double sn = sequence_norm(c.values, sys, cfg.params);
    std::ofstream os = open_out(cfg, "norms.csv");
    os << "# config_hash=" << config_hash(cfg) << "\n";
    os << "quantity,value\n";
    char buf[128];
    auto row = [&](const char* k, double v) {
        std::snprintf(buf, sizeof buf, "%s,%.17g\n", k, v);
        os << buf;
        std::cout << k << " = " << v << "\n";
    };
    row("besov_norm", bn);
    row("sequence_norm", sn);
    row("ratio", sn / bn);
    row("residual", c.residual);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"atomic decompositions on symmetric cones and tube domains"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global flags after the subcommand too
    std::string config_path, out_dir, demo_name;
    std::int64_t seed_override = -1;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed_override, "seed override");

    CLI::App* gate = app.add_subcommand("gate", "index-gate report");
    CLI::App* demo = app.add_subcommand("demo", "end-to-end decomposition demo");
    demo->add_option("name", demo_name, "uhp | lightcone | spd")->required();
    CLI::App* cmp = app.add_subcommand("compare", "parameter-range comparison");
    CLI::App* lattice = app.add_subcommand("lattice", "lattice construction report");
    CLI::App* norms = app.add_subcommand("norms", "norm-equivalence report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError&) {
        std::cerr << "usage error; try --help\n";
        return 64;
    }

    try {
        RunConfig cfg =
            demo->parsed() ? demo_defaults(demo_name) : RunConfig{};
        if (!config_path.empty()) load_config(cfg, config_path);
        if (demo->parsed()) {
            // the demo name pins the cone; other fields follow the config
            cfg.cone = demo_defaults(demo_name).cone;
        }
        if (!out_dir.empty()) cfg.out = out_dir;
        if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);

        if (gate->parsed()) return cmd_gate(cfg);
        if (demo->parsed()) return cmd_demo(cfg, demo_name);
        if (cmp->parsed()) return cmd_compare(cfg);
        if (lattice->parsed()) return cmd_lattice(cfg);
        if (norms->parsed()) return cmd_norms(cfg);
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 64;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

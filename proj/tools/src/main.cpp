#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "curve_spec.hpp"

namespace cli = superconic::cli;

namespace {

struct Flags {
    cli::CurveSpec spec;
    std::string config;
    std::string out_dir;
    std::string format = "csv";
    std::vector<double> sweep;
    std::vector<std::string> suites;
};

void add_curve_options(CLI::App* cmd, Flags& f, bool eta_i_is_list) {
    cmd->add_option("--m", [&f](const std::vector<std::string>& v) {
        f.spec.m = std::stod(v[0]);
        return true;
    }, "refractive-index ratio n'/n");
    if (eta_i_is_list) {
        cmd->add_option("--eta-i", f.spec.eta_i_list, "family eta_i values")
            ->delimiter(',');
    } else {
        cmd->add_option("--eta-i", [&f](const std::vector<std::string>& v) {
            f.spec.eta_i = std::stod(v[0]);
            return true;
        }, "epsilon / source distance");
    }
    cmd->add_option("--eta-o", [&f](const std::vector<std::string>& v) {
        f.spec.eta_o = std::stod(v[0]);
        return true;
    }, "epsilon / focus distance");
    cmd->add_option("--c0", [&f](const std::vector<std::string>& v) {
        f.spec.c0 = std::stod(v[0]);
        return true;
    }, "vertex curvature");
    cmd->add_option("--K", [&f](const std::vector<std::string>& v) {
        f.spec.K = std::stod(v[0]);
        return true;
    }, "conic constant");
    cmd->add_option("--epsilon", [&f](const std::vector<std::string>& v) {
        f.spec.epsilon = std::stod(v[0]);
        return true;
    }, "length scale");
    cmd->add_option("--ymax", f.spec.y_max, "largest aperture height");
    cmd->add_option("--samples", f.spec.samples, "number of grid samples");
    cmd->add_option("--asphere", f.spec.asphere, "aspheric coefficients f4,f6,...")
        ->delimiter(',');
    cmd->add_option("--config", f.config, "JSON config file (flags take precedence)");
}

std::vector<std::string> set_fields(const CLI::App* cmd) {
    std::vector<std::string> out;
    static const std::pair<const char*, const char*> names[] = {
        {"--m", "m"},           {"--eta-i", "eta_i"},    {"--eta-o", "eta_o"},
        {"--c0", "c0"},         {"--K", "K"},            {"--epsilon", "epsilon"},
        {"--ymax", "y_max"},    {"--samples", "samples"}, {"--asphere", "asphere"},
    };
    for (auto [flag, key] : names) {
        const CLI::Option* o = cmd->get_option_no_throw(flag);
        if (o && o->count() > 0) out.emplace_back(key);
    }
    // --eta-i doubles as the family list
    const CLI::Option* o = cmd->get_option_no_throw("--eta-i");
    if (o && o->count() > 0) out.emplace_back("eta_i_list");
    return out;
}

int run_with_config(CLI::App* cmd, Flags& f, const std::function<int()>& body) {
    if (!f.config.empty()) {
        const std::string e = cli::load_config(f.config, f.spec, set_fields(cmd));
        if (!e.empty()) {
            std::cerr << e << "\n";
            return e.rfind("cannot open", 0) == 0 ? cli::kIoError : cli::kInvalid;
        }
    }
    return body();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit Cartesian-oval optical solutions, conic limits and "
                 "superconic curves"};
    app.require_subcommand(1);

    Flags fs, ff, fv, fl;

    CLI::App* sample = app.add_subcommand("sample", "sample one curve as CSV/JSON");
    add_curve_options(sample, fs, false);
    sample->add_option("--format", fs.format, "csv or json");
    sample->add_option("--out", fs.out_dir, "write into this directory instead of stdout");

    CLI::App* family = app.add_subcommand("family", "build a (c0, m) family; emits JSON + SVG");
    add_curve_options(family, ff, true);
    family->add_option("--out", ff.out_dir, "output directory")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the oracle suites on an oval");
    add_curve_options(verify, fv, false);
    verify->add_option("--suites", fv.suites,
                       "subset of quartic,tracking,snell,symmetry,limits")
        ->delimiter(',');

    CLI::App* limits = app.add_subcommand("limits", "conic-limit convergence table");
    add_curve_options(limits, fl, false);
    limits->add_option("--sweep", fl.sweep, "decreasing eta values")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kInvalid;
    }

    if (sample->parsed()) {
        return run_with_config(sample, fs, [&] {
            if (fs.out_dir.empty()) return cli::cmd_sample(fs.spec, fs.format, std::cout, std::cerr);
            std::error_code ec;
            std::filesystem::create_directories(fs.out_dir, ec);
            const std::string name =
                fs.format == "json" ? "sample.json" : "sample.csv";
            std::ofstream out(std::filesystem::path(fs.out_dir) / name, std::ios::binary);
            if (!out) {
                std::cerr << "cannot write " << fs.out_dir << "/" << name << "\n";
                return cli::kIoError;
            }
            return cli::cmd_sample(fs.spec, fs.format, out, std::cerr);
        });
    }
    if (family->parsed()) {
        return run_with_config(family, ff, [&] {
            return cli::cmd_family(ff.spec, ff.out_dir, std::cerr);
        });
    }
    if (verify->parsed()) {
        return run_with_config(verify, fv, [&] {
            return cli::cmd_verify(fv.spec, fv.suites, std::cout, std::cerr);
        });
    }
    return run_with_config(limits, fl, [&] {
        return cli::cmd_limits(fl.spec, fl.sweep, std::cout, std::cerr);
    });
}

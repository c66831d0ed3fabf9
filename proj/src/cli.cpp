// cli.cpp — qfridge command-line front end

#include "qfridge/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfridge/config.hpp"
#include "qfridge/sweep.hpp"

namespace qfridge::cli {

namespace {

struct Options {
    std::string preset;
    std::string config;
    std::string out;
    std::vector<std::string> backends;
    std::vector<std::string> settings;
    std::string axis1;
    std::string axis2;
    std::string grid;
    std::string n_list;
    std::optional<int> workers;
    std::optional<int> cutoff_cap;
};

void add_options(CLI::App& sub, Options& o)
{
    sub.add_option("--preset", o.preset, "figure recipe: fig3, fig5-top, fig5-mid, fig5-bot, fig7, fig8, fig9, fig10");
    sub.add_option("--config", o.config, "key = value configuration file");
    sub.add_option("--out", o.out, "output CSV path (stdout when omitted)");
    sub.add_option("--backend", o.backends, "weak, floquet-lindblad, floquet-pauli, redfield")
        ->delimiter(',');
    sub.add_option("--set", o.settings, "override a configuration key, key=value");
    sub.add_option("--axis1", o.axis1, "first axis as name:min:max:count");
    sub.add_option("--axis2", o.axis2, "second axis as name:min:max:count");
    sub.add_option("--grid", o.grid, "point counts AxB for the two axes");
    sub.add_option("--n-list", o.n_list, "qutrit numbers, e.g. 1-10,20,30-200:10");
    sub.add_option("--workers", o.workers, "worker threads");
    sub.add_option("--redfield-cutoff-cap", o.cutoff_cap, "largest Fourier cutoff tried by redfield");
}

Axis recount(const Axis& a, int count)
{
    if (a.name == AxisName::N) throw std::invalid_argument("--grid does not apply to an N axis");
    return Axis::linspace(a.name, a.values.front(), a.values.back(), count);
}

SweepSpec build_spec(const std::string& command, const Options& o)
{
    SweepSpec spec;
    if (!o.preset.empty()) {
        spec = preset(o.preset);
    } else if (command == "scan") {
        spec.axes = {Axis::linspace(AxisName::lambda, 0.0, 3.0, 61)};
    } else if (command == "nscale") {
        spec.axes = {Axis{AxisName::N, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}};
    } else {
        spec.axes = {Axis::linspace(AxisName::Omega, -3.0, 3.0, 61),
                     Axis::linspace(AxisName::lambda, -3.0, 3.0, 61)};
    }
    spec.command = command;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw std::invalid_argument("cannot read config file '" + o.config + "'");
        apply_config(spec, in);
    }
    for (const auto& kv : o.settings) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value");
        apply_setting(spec, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!o.backends.empty()) {
        spec.backends.clear();
        for (const auto& b : o.backends) spec.backends.push_back(parse_backend(b));
    }
    if (!o.n_list.empty()) spec.axes = {Axis{AxisName::N, {}}};
    if (!o.n_list.empty()) {
        for (const int n : parse_int_list(o.n_list)) spec.axes[0].values.push_back(n);
    }
    if (!o.axis1.empty()) {
        if (spec.axes.empty()) spec.axes.resize(1);
        spec.axes[0] = parse_axis(o.axis1);
    }
    if (!o.axis2.empty()) {
        if (spec.axes.size() < 2) spec.axes.resize(2);
        spec.axes[1] = parse_axis(o.axis2);
    }
    if (!o.grid.empty()) {
        const auto x = o.grid.find_first_of("xX");
        if (x == std::string::npos || spec.axes.size() != 2) {
            throw std::invalid_argument("--grid expects AxB on a two-axis sweep");
        }
        int a = 0;
        int b = 0;
        try {
            a = std::stoi(o.grid.substr(0, x));
            b = std::stoi(o.grid.substr(x + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("--grid expects AxB");
        }
        spec.axes[0] = recount(spec.axes[0], a);
        spec.axes[1] = recount(spec.axes[1], b);
    }
    if (o.workers) spec.workers = *o.workers;
    if (o.cutoff_cap) spec.limits.redfield_cutoff_cap = *o.cutoff_cap;
    if (!o.out.empty()) spec.out = o.out;
    spec.validate();
    return spec;
}

int execute(const SweepSpec& spec, std::ostream& out, std::ostream& err)
{
    auto rows = run_sweep(spec);
    const bool nscale = spec.command == "nscale";
    if (nscale) annotate_nscale(spec, rows);

    std::ofstream file;
    std::ostream* os = &out;
    if (!spec.out.empty()) {
        file.open(spec.out);
        if (!file) {
            err << "qfridge: cannot write '" << spec.out << "'\n";
            return exit_failure;
        }
        os = &file;
    }
    write_csv(*os, rows, nscale);

    if (spec.command == "check-conditions") {
        const auto pts = condition_boundaries(spec);
        if (spec.out.empty()) {
            out << "\n";
            write_boundaries_csv(out, pts);
        } else {
            std::ofstream bfile(spec.out + ".boundaries.csv");
            if (!bfile) {
                err << "qfridge: cannot write boundary file\n";
                return exit_failure;
            }
            write_boundaries_csv(bfile, pts);
        }
    }

    std::size_t failed = 0;
    for (const auto& r : rows) failed += r.failed ? 1 : 0;
    if (!rows.empty() && failed == rows.size()) {
        err << "qfridge: every point failed\n";
        return exit_failure;
    }
    if (failed > 0) {
        err << "qfridge: " << failed << " of " << rows.size() << " points failed\n";
        return exit_partial;
    }
    return exit_ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Collective driven-qutrit refrigerator: steady-state heat currents", "qfridge"};
    app.require_subcommand(1);
    Options opts;
    const std::vector<std::string> commands{"map", "scan", "nscale", "check-conditions"};
    const std::vector<std::string> help{
        "two-axis grid over Omega and lambda",
        "one-axis scan comparing backends",
        "current versus qutrit number N",
        "cooling-condition classification and boundary curves",
    };
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        subs.push_back(app.add_subcommand(commands[i], help[i]));
        add_options(*subs.back(), opts);
    }

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "qfridge: " << e.what() << '\n';
        return exit_usage;
    }

    std::string command;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) command = commands[i];
    }
    SweepSpec spec;
    try {
        spec = build_spec(command, opts);
    } catch (const std::exception& e) {
        err << "qfridge: " << e.what() << '\n';
        return exit_usage;
    }
    try {
        return execute(spec, out, err);
    } catch (const std::exception& e) {
        err << "qfridge: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace qfridge::cli

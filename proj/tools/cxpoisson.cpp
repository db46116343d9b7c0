#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cxpoisson/commands.hpp"

namespace {

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with complex Poisson bivectors and complex Dirac structures"};
    app.require_subcommand(1);

    std::string file, points, format = "human", checks;
    int grid_size = 20;
    bool timing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "problem file (JSON)")->required();
        sub->add_option("--points", points, "extra sample points, e.g. \"1,2,3;1/2,0,-1\"");
        sub->add_option("--grid-size", grid_size, "number of default grid points")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"human", "machine"}));
        sub->add_option("--check", checks, "comma-separated check ids");
        sub->add_flag("--timing", timing, "add wall-clock time per record");
    };
    for (const char* name : {"check", "invariants", "dirac", "normal-form"}) {
        std::string desc = std::string("run the ") + name + " checks on a problem file";
        add_common(app.add_subcommand(name, desc));
    }
    auto* print = app.add_subcommand("print", "parse a problem file and print it in canonical form");
    print->add_option("file", file, "problem file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    cxp::ProblemFile pf;
    try {
        pf = cxp::load_problem(file);
    } catch (const std::exception& e) {
        std::cerr << file << ": " << e.what() << "\n";
        return 2;
    }
    if (print->parsed()) {
        std::cout << cxp::print_problem(pf);
        return 0;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    cxp::RunOptions opts;
    opts.grid_size = grid_size;
    opts.timing = timing;
    opts.checks = split_ids(checks);
    cxp::Report rep;
    try {
        if (!points.empty()) opts.extra_points = cxp::parse_point_list(points, pf.chart.dim());
        rep = cxp::run_command(command, pf, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << (format == "machine" ? cxp::render_machine(rep) : cxp::render_human(rep));
    return rep.exit_code();
}

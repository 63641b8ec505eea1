// Command-line front end. All reports are deterministic; see README for
// the document formats and exit codes.

#include <iostream>

#include "CLI11.hpp"

#include "gpois/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for weighted graded Poisson structures on polynomial rings"};
    app.require_subcommand(1);

    gpois::RunConfig config;
    std::vector<std::string> params;

    auto add_common = [&](CLI::App* cmd, bool needs_structure) {
        if (needs_structure) {
            cmd->add_option("--input", config.input_path, "structure document (JSON)");
            cmd->add_option("--catalog", config.catalog_name, "built-in structure name");
            cmd->add_option("--param", params, "catalog parameter key=value (repeatable)");
        }
        cmd->add_option("--max-degree", config.max_degree, "top degree N of the window")
            ->capture_default_str();
        cmd->add_option("--degree-cap", config.degree_cap, "hard cap on --max-degree")
            ->capture_default_str();
        cmd->add_option("--central", config.central,
                        "central element for ozone conditions (repeatable)");
        cmd->add_option("--format", config.format, "json or table")->capture_default_str();
        cmd->add_option("--out", config.out_path, "write the report to a file");
    };

    const char* structure_commands[] = {"verify",      "modular", "unimodularize",
                                        "rgt",         "center",  "derivations",
                                        "cohomology",  "report"};
    const char* descriptions[] = {
        "check gradedness and the Jacobi identity",
        "modular derivation and its divergence",
        "twist to the unimodular representative",
        "rigidity of graded twisting and Gpd/Gspd dimensions",
        "graded slices of the Poisson center",
        "per-degree Poisson/Hamiltonian/center/ozone dimensions",
        "graded Poisson cohomology window",
        "verify + modular + rgt + derivations + cohomology",
    };
    for (std::size_t i = 0; i < std::size(structure_commands); ++i)
        add_common(app.add_subcommand(structure_commands[i], descriptions[i]), true);

    CLI::App* twist = app.add_subcommand("twist", "apply a graded twist to a structure");
    add_common(twist, true);
    twist->add_option("--derivation", config.derivation_path,
                      "derivation document (JSON) with the twisting data");

    CLI::App* catalog = app.add_subcommand("catalog", "list or show built-in structures");
    catalog->add_option("action", config.catalog_action, "list or show")->required();
    catalog->add_option("name", config.catalog_name, "entry name for show");
    catalog->add_option("--param", params, "catalog parameter key=value (repeatable)");
    catalog->add_option("--format", config.format, "json or table")->capture_default_str();
    catalog->add_option("--out", config.out_path, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    config.command = app.get_subcommands().front()->get_name();
    for (const std::string& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "error: --param needs key=value, got: " << kv << "\n";
            return 2;
        }
        config.params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }

    return gpois::run(config, std::cout, std::cerr);
}

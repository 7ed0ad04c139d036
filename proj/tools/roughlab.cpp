#include "roughlab/cli.hpp"

#include <CLI11.hpp>

#include <map>

int main(int argc, char** argv) {
    CLI::App app{"roughlab: exact rough-function constructions and difference-quotient witnesses"};
    app.require_subcommand(1);

    roughlab::RunConfig config;
    std::map<std::string, std::map<std::string, std::string>> values;

    for (const auto& name : roughlab::commands()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("-o,--output", config.output_path, "output file (default stdout)");
        sub->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", config.seed, "seed for randomized choices");
        for (const auto& p : roughlab::command_params(name)) {
            auto* opt = sub->add_option("--" + p.name, values[name][p.name], p.help);
            if (!p.fallback.empty()) opt->default_str(p.fallback);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    CLI::App* chosen = app.get_subcommands().front();
    config.command = chosen->get_name();
    for (const auto& p : roughlab::command_params(config.command))
        if (chosen->count("--" + p.name) > 0) config.params[p.name] = values[config.command][p.name];
    return roughlab::run(config);
}

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tor3/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Koszul homology classifier for graded quotients of a 3-variable polynomial ring"};
    app.require_subcommand(1);

    tor3::CliOptions options;
    std::string order_name = "degrevlex";
    std::optional<std::string> file, inline_ideal;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--char", options.characteristic, "prime field characteristic");
        cmd->add_option("--order", order_name, "monomial order")
            ->check(CLI::IsMember({"degrevlex", "deglex"}));
        cmd->add_option("--max-degree", options.max_degree,
                        "cap the internal degree of the homology scan");
        cmd->add_flag("--json", options.json, "machine-readable output");
        cmd->add_flag("--tables", options.tables,
                      "print representative cycles and multiplication tables");
        cmd->add_flag("--quiet", options.quiet, "suppress stdout; the exit code carries the result");
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "ideal description file");
        cmd->add_option("--ideal", inline_ideal, "inline comma-separated generator list");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify one ideal");
    add_input(classify);
    add_common(classify);
    CLI::App* corpus = app.add_subcommand("corpus", "check the built-in ideals against their expected data");
    add_common(corpus);
    CLI::App* verify = app.add_subcommand("verify", "run the invariant audit on one ideal");
    add_input(verify);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    options.order = order_name == "deglex" ? tor3::OrderKind::deglex : tor3::OrderKind::degrevlex;

    if (classify->parsed()) return tor3::cmd_classify(file, inline_ideal, options, std::cout, std::cerr);
    if (corpus->parsed()) return tor3::cmd_corpus(options, std::cout, std::cerr);
    return tor3::cmd_verify(file, inline_ideal, options, std::cout, std::cerr);
}

// Command-line front end: parses a presentation document and runs one of the
// verification or report commands over the generated skeleton.

#include <iostream>

#include <CLI11.hpp>

#include "crossres/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"2-skeleton of the free simplicial resolution of a finitely presented group,"
                 " with its crossed-complex reading"};
    app.require_subcommand(1);

    crossres::CommandOptions opts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", opts.input_path, "presentation document")->required();
        cmd->add_option("--seed", opts.seed, "seed for sampled checks");
        cmd->add_option("--samples", opts.samples, "sample count for sampled checks");
        return cmd;
    };

    add_common(app.add_subcommand("validate", "parse, check identities and the CW-basis"));
    auto* skeleton = add_common(app.add_subcommand("skeleton", "basis tables and identity suite"));
    skeleton->add_option("--level", opts.level, "top level to build (0..3)")->required();
    auto* moore = add_common(app.add_subcommand("moore", "Moore membership and boundary"));
    moore->add_option("--level", opts.level, "level of the word")->required();
    moore->add_option("--word", opts.word, "word to test")->required();
    auto* peiffer = add_common(app.add_subcommand("peiffer", "pairing and Peiffer-family checks"));
    peiffer->add_option("--dim", opts.dim, "dimension (1 or 2)")->required();
    auto* cosets = add_common(app.add_subcommand("cosets", "coset enumeration of the group"));
    cosets->add_option("--max", opts.max_cosets, "coset bound");
    cosets->add_flag("--dump", opts.dump, "print the full table");
    auto* cc = add_common(app.add_subcommand("crossed-complex", "assemble the crossed complex"));
    cc->add_option("--max", opts.max_cosets, "coset bound");
    add_common(app.add_subcommand("word-system", "leveled generator/boundary listing"));

    CLI11_PARSE(app, argc, argv);

    opts.command = app.get_subcommands().front()->get_name();
    return crossres::run_command(opts, std::cout);
}

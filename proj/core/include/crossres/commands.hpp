#ifndef CROSSRES_COMMANDS_HPP
#define CROSSRES_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace crossres {

// Options for one CLI invocation.  Reports are plain text with stable
// ordering; given the same input and seed the output is byte-identical.
struct CommandOptions {
    std::string command;  // validate, skeleton, moore, peiffer, cosets,
                          // crossed-complex, word-system
    std::string input_path;
    int level = -1;       // skeleton, moore
    std::string word;     // moore
    int dim = 2;          // peiffer
    int samples = 200;
    std::uint64_t seed = 42;
    int max_cosets = 100000;
    bool dump = false;    // cosets

    int suite_trials = 200;  // words per level in the simplicial-identity suite
};

// Exit status: 0 all checks pass, 1 a check failed, 2 error (bad input,
// usage, overflow).  Errors print a machine-readable `ERROR <code>: ...`
// line on the report stream.
int run_command(const CommandOptions& opts, std::ostream& out);

}  // namespace crossres

#endif

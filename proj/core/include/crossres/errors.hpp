#ifndef CROSSRES_ERRORS_HPP
#define CROSSRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crossres {

// Malformed values: mixed levels, out-of-range indices, missing images.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed values violating an operation's precondition
// (non-Moore inputs, identity words with nontrivial faces, bad documents).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Coset enumeration exceeded its coset bound; the group may be infinite.
struct CosetOverflow : std::runtime_error {
    int max_cosets;
    explicit CosetOverflow(int bound)
        : std::runtime_error("coset enumeration exceeded bound " + std::to_string(bound)),
          max_cosets(bound) {}
};

}  // namespace crossres

#endif

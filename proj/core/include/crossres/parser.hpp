#ifndef CROSSRES_PARSER_HPP
#define CROSSRES_PARSER_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crossres/skeleton.hpp"

namespace crossres {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& message)
        : std::runtime_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " +
                             message),
          line(line_),
          col(col_) {}
};

// A parsed presentation document.
//
//   [generators]
//   a b
//   [relators]
//   r: a a
//   [identities]
//   i1: r^-1 (a>r)
//
// Relator words are products of generator letters with optional nonzero
// integer exponents.  Identity words are products of conjugated-relator
// terms: a bare relator name r, or (gword>r) meaning the conjugate of r by
// s0(gword); "1" denotes the empty word.  Names are unique per section.
struct InputDocument {
    std::vector<std::string> generators;
    std::vector<std::pair<std::string, Word>> relators;    // level-0 words
    std::vector<std::pair<std::string, Word>> identities;  // level-1 words

    ConstructionData to_construction_data() const;
    static InputDocument from_construction_data(const ConstructionData& data);

    auto operator<=>(const InputDocument&) const = default;
};

InputDocument parse_document(const std::string& text);

// Canonical pretty-printer; parse(render(parse(text))) == parse(text).
std::string render_document(const InputDocument& doc);

// Parse a standalone word at the given level.  Atoms: generator names
// (resolved as fully degenerate copies at the target level), relator names
// (level 1), identity names (level 2), conjugated-relator terms (gword>r)
// at level 1, and explicit degeneracy applications s<i>(word) lifting a
// level n-1 word, e.g. s1(s0(a)) or s0(r)^-1.
Word parse_word(const std::string& text, int level, const ConstructionData& data);

}  // namespace crossres

#endif

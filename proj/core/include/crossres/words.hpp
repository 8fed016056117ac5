#ifndef CROSSRES_WORDS_HPP
#define CROSSRES_WORDS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossres/errors.hpp"
#include "crossres/simplicial_maps.hpp"

namespace crossres {

// A basis element of some level of a free simplicial group: the name of the
// element it was born from, the birth level (0 for presentation generators,
// 1 for relator generators, 2 for identity generators), and the increasing
// surjection recording its degeneracy history.  The history of a symbol
// living at level n is a surjection [n] -> [birth_level]; it is the
// identity exactly for non-degenerate symbols.
struct GeneratorSymbol {
    std::string basis_id;
    int birth_level = 0;
    MonotoneSurjection history;

    int level() const { return history.domain_size() - 1; }
    bool degenerate() const { return !history.is_identity(); }

    auto operator<=>(const GeneratorSymbol&) const = default;
};

struct Letter {
    GeneratorSymbol symbol;
    int exponent = 1;  // +1 or -1

    auto operator<=>(const Letter&) const = default;
};

// Freely reduced word over one level's symbols.  Immutable by convention:
// every operation returns a fresh reduced word, so structural equality is
// equality in the free group.
struct Word {
    int level = 0;
    std::vector<Letter> letters;

    static Word identity(int level) { return Word{level, {}}; }

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    auto operator<=>(const Word&) const = default;
};

// Free reduction of a raw letter sequence at the given level.  Idempotent;
// letters must all live at `level`.
Word reduce(int level, std::vector<Letter> raw);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
// Left conjugation action: g f g^-1.
Word conjugate(const Word& g, const Word& f);
// u v u^-1 v^-1.
Word commutator(const Word& u, const Word& v);
Word power(const Word& u, int n);

// Homomorphic extension of a generator map: `image` maps each symbol
// occurring in w to a word (all images at one level); applied letterwise
// respecting exponents, then reduced.  A missing image is a structural
// error.  The empty word maps to the empty word at its own level.
template <typename ImageFn>
Word apply_hom(ImageFn&& image, const Word& w) {
    if (w.empty()) return w;
    std::vector<Letter> out;
    int target = -1;
    bool target_known = false;
    for (const Letter& l : w.letters) {
        std::optional<Word> img = image(l.symbol);
        if (!img)
            throw StructuralError("apply_hom: no image for symbol '" + l.symbol.basis_id + "'");
        if (!target_known) {
            target = img->level;
            target_known = true;
        } else if (!img->empty() && img->level != target) {
            throw StructuralError("apply_hom: images at mixed levels");
        }
        if (l.exponent == 1) {
            out.insert(out.end(), img->letters.begin(), img->letters.end());
        } else {
            Word inv = invert(*img);
            out.insert(out.end(), inv.letters.begin(), inv.letters.end());
        }
    }
    return reduce(target, std::move(out));
}

// Symbol and word rendering.  Degenerate symbols print as nested degeneracy
// applications, e.g. s1(s0(a)); runs of equal symbols merge into powers.
std::string render_symbol(const GeneratorSymbol& s);
std::string render_word(const Word& w);  // empty word prints as "1"

}  // namespace crossres

#endif

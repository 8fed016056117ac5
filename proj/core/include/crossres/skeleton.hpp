#ifndef CROSSRES_SKELETON_HPP
#define CROSSRES_SKELETON_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crossres/rng.hpp"
#include "crossres/words.hpp"

namespace crossres {

// A group presentation <X0 | relators>: the level-0 construction data.
// Relator words live at level 0 over the X0 symbols.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::pair<std::string, Word>> relators;
};

// Presentation plus named identity words: the level-1 construction data.
// An identity word is a level-1 word over {s0-degenerate X0} and the relator
// generators whose two faces are both trivial (an identity among relations).
struct ConstructionData {
    Presentation presentation;
    std::vector<std::pair<std::string, Word>> identities;
};

struct CwBasisReport {
    int symbols_checked = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

struct IdentitySuiteReport {
    long checks = 0;
    long failures = 0;
    std::vector<std::string> witnesses;  // first few counterexamples
    bool passed() const { return failures == 0; }
};

// Low-dimensional skeleton of the free simplicial resolution generated by
// construction data.  Holds the level-graded basis tables (every legal
// (birth element, degeneracy history) pair up to max_level) and evaluates
// faces and degeneracies on words.
//
// The face of a letter (b, t) under d_i classifies u = t . delta_i:
//   surjective u          -> (b, u)
//   u = delta_k . t'      -> t' applied, as a degeneracy composite, to the
//                            word attached to b (the relator word for level-1
//                            births, the identity word for level-2 births);
//                            level-0 births never reach this branch since
//                            every map onto [0] is surjective
//   u = delta_j . t', j<k -> the empty word
// extended multiplicatively over letters.
class Skeleton {
public:
    static constexpr int kMaxSupportedLevel = 3;

    // Validates the data (including every identity word) and populates the
    // basis tables for levels 0..max_level.
    static Skeleton build(ConstructionData data, int max_level = kMaxSupportedLevel);

    int max_level() const { return max_level_; }
    const ConstructionData& data() const { return data_; }

    std::span<const GeneratorSymbol> basis(int level) const;
    bool in_basis(const GeneratorSymbol& s) const;

    // Word attached to a birth element: relator word (level 0) for level-1
    // births, identity word (level 1) for level-2 births; null for X0.
    const Word* attached_word(int birth_level, const std::string& basis_id) const;

    // Non-degenerate symbol born from a named element, as a one-letter word
    // at its birth level.
    Word generator(const std::string& basis_id) const;

    Word face(int i, const Word& w) const;
    Word degeneracy(int i, const Word& w) const;
    // Apply the degeneracy composite realizing t (codomain = w.level) to w.
    Word apply_surjection(const MonotoneSurjection& t, const Word& w) const;

    // Moore complex at level n >= 1: intersection of Ker d_0 .. Ker d_{n-1};
    // the boundary is the remaining face d_n.
    bool moore_member(const Word& w) const;
    Word moore_boundary(const Word& w) const;

    // True iff both faces of a level-1 word vanish: an identity among
    // relations.
    bool verify_identity(const Word& w) const;

    // Uniform random word over the level's basis table, geometric length.
    Word sample_word(int level, Rng& rng, int max_len = 30) const;

private:
    Word face_impl(int i, const Word& w) const;

    ConstructionData data_;
    int max_level_ = 0;
    std::vector<std::vector<GeneratorSymbol>> tables_;
    std::map<std::string, Word> relator_words_;
    std::map<std::string, Word> identity_words_;
};

// CW-basis axioms on the skeleton's tables: (a) tables are duplicate-free
// (free generation), (b) closure under degeneracies, (c) every
// non-degenerate element above level 0 has all faces trivial except the
// last (so the new generators lie in the Moore complex).
CwBasisReport cw_basis_check(const Skeleton& sk);
// Same checks against externally supplied tables (for exercising failures).
CwBasisReport cw_basis_check_tables(const Skeleton& sk,
                                    const std::vector<std::vector<GeneratorSymbol>>& tables);

// Exhaustive simplicial-identity check on all basis generators plus `trials`
// seeded random words per level: d_i d_j = d_{j-1} d_i (i < j), the five
// d_i s_j cases, and s_i s_j = s_{j+1} s_i (i <= j), over every index pair
// legal within max_level.
IdentitySuiteReport simplicial_identity_suite(const Skeleton& sk, int trials,
                                              std::uint64_t seed);

}  // namespace crossres

#endif

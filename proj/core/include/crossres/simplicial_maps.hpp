#ifndef CROSSRES_SIMPLICIAL_MAPS_HPP
#define CROSSRES_SIMPLICIAL_MAPS_HPP

#include <compare>
#include <vector>

namespace crossres {

// Increasing surjection t : [m] -> [n] between finite ordinals, stored as the
// value sequence t(0), ..., t(m).  These index the degeneracy histories of
// basis elements in a free simplicial group: the composite of the coface
// delta_i with t classifies faces, the composite with the codegeneracy
// alpha_i implements degeneracies.
struct MonotoneSurjection {
    std::vector<int> values;

    static MonotoneSurjection identity(int n);
    // alpha_i^n : [n+1] -> [n], repeating i (0 <= i <= n).
    static MonotoneSurjection codegeneracy(int n, int i);

    int domain_size() const { return static_cast<int>(values.size()); }
    int codomain() const { return values.empty() ? -1 : values.back(); }
    int operator()(int x) const { return values[static_cast<std::size_t>(x)]; }
    bool is_identity() const { return domain_size() == codomain() + 1; }
    bool well_formed() const;

    auto operator<=>(const MonotoneSurjection&) const = default;
};

// Outcome of composing a history t : [n] -> [k] with the coface delta_i^n.
// When the composite u is not surjective it misses exactly one value j of
// [k] and factors as delta_j^k . t' with t' an increasing surjection onto
// [k-1].  The j = k case is the one that evaluates attached boundary words.
struct FaceClassification {
    enum class Kind { Surjective, LastCoface, OtherCoface };
    Kind kind;
    int missed;               // j in the coface cases; -1 when surjective
    MonotoneSurjection map;   // u when surjective, t' otherwise
};

// All increasing surjections [m] -> [n], in lexicographic order of their
// value sequences.  Empty when m < n.  There are C(m, n) of them.
std::vector<MonotoneSurjection> enumerate_surjections(int m, int n);

// Classify u = t . delta_i^n for t : [n] -> [k], 0 <= i <= n, n >= 1.
FaceClassification compose_delta(const MonotoneSurjection& t, int i);

// u = t . alpha_i^n for t : [n] -> [k], 0 <= i <= n; always surjective.
MonotoneSurjection compose_alpha(const MonotoneSurjection& t, int i);

// The canonical degeneracy word of t : [n] -> [k]: strictly decreasing
// indices i_1 > ... > i_{n-k} such that applying the operators s_{i_{n-k}}
// first and s_{i_1} last realizes t (empty for the identity).  Equivalently
// the positions where t repeats, listed in descending order; re-composing
// with compose_alpha from the back of the sequence recovers t.
std::vector<int> decompose_to_degeneracies(const MonotoneSurjection& t);

}  // namespace crossres

#endif

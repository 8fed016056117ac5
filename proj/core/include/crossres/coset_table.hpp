#ifndef CROSSRES_COSET_TABLE_HPP
#define CROSSRES_COSET_TABLE_HPP

#include <map>
#include <string>
#include <vector>

#include "crossres/skeleton.hpp"
#include "crossres/words.hpp"

namespace crossres {

// Complete coset table for the regular action of G = F(X0)/N on itself,
// built by relator-scanning coset enumeration (HLT strategy, coincidence
// queue, no lookahead) over the trivial subgroup.  Cosets are renumbered by
// breadth-first discovery order, so tables are deterministic; coset 1 is the
// identity.  Tracing words through the table decides equality in G.
class CosetTable {
public:
    // Throws CosetOverflow if more than max_cosets cosets are ever live; the
    // group may be infinite or the bound too small.
    static CosetTable enumerate(const Presentation& pres, int max_cosets);

    int size() const { return static_cast<int>(rows_.size()); }
    int generator_count() const { return n_gens_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }

    // Image of a coset (1-based) under a generator (by index) or its inverse.
    int apply(int coset, int gen_index, int sign) const;

    // Trace a word over X0-born symbols from coset 1.  Histories are ignored
    // (degenerate copies of a generator act as the generator); letters born
    // above level 0 are a structural error.
    int class_of(const Word& w) const;

    // Product of two element classes: trace the representative of h from g.
    int compose(int g, int h) const;

    // Breadth-first representative word (level 0) of a coset.
    const Word& representative(int coset) const;

    // One row per coset: images under each column of generator_order, tab
    // separated, preceded by a header line listing generator_order.
    std::string dump() const;

private:
    int n_gens_ = 0;
    std::vector<std::string> gen_names_;
    std::vector<std::vector<int>> rows_;  // size() x (2 * n_gens_), 1-based images
    std::vector<Word> reps_;
};

// Element of the integral group ring ZG (coset index -> coefficient), tagged
// with the basis symbol it multiplies when used as a module coordinate.
// Zero coefficients are never stored.
struct GroupRingElement {
    std::string basis;
    std::map<int, int> coeffs;

    static GroupRingElement zero(std::string basis_tag) {
        return GroupRingElement{std::move(basis_tag), {}};
    }
    static GroupRingElement unit(std::string basis_tag, int coset, int coeff = 1);

    bool is_zero() const { return coeffs.empty(); }
    auto operator<=>(const GroupRingElement&) const = default;
};

GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement ring_negate(const GroupRingElement& a);
// Left translation of every coset index by the class g.
GroupRingElement ring_act(const CosetTable& table, int g, const GroupRingElement& a);

std::string render_ring_element(const CosetTable& table, const GroupRingElement& a);

}  // namespace crossres

#endif

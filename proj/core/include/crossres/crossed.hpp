#ifndef CROSSRES_CROSSED_HPP
#define CROSSRES_CROSSED_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossres/coset_table.hpp"
#include "crossres/skeleton.hpp"

namespace crossres {

// One factor ^{s0(conjugator)} y_relator^exponent of a word in the normal
// closure of the relator generators.
struct ConjugatedTerm {
    Word conjugator;  // level-0 word
    std::string relator;
    int exponent = 1;

    auto operator<=>(const ConjugatedTerm&) const = default;
};

// Decompose a level-1 word into conjugated-relator factors.  The word must
// lie in the normal closure of the relator generators (equivalently its d_0
// image is trivial); each relator letter picks up the d_0 image of its
// prefix as conjugator, and consecutive equal factors merge into powers.
std::vector<ConjugatedTerm> conjugate_terms(const Word& w);
std::string render_conjugate_form(const Word& w);

// Element of C1 = <Y1>/P1, the free crossed module on the presentation.
// Equality is decided by the pair (free boundary, abelianization in the free
// ZG-module on the relator set); the pair is faithful on free crossed
// modules.  Without a coset table only the boundary is available and the
// element is `partial`.
struct C1Element {
    Word representative;  // level-1 word in conjugated-relator shape
    Word boundary;        // d_1 of the representative, level 0
    bool has_ab = false;
    std::map<std::string, GroupRingElement> ab;  // relator name -> ZG coordinate
};

// table may be null: the abelianization is then skipped and the element is
// partial.  Shape violations (a letter outside the normal closure) throw.
C1Element c1_element(const Skeleton& sk, const CosetTable* table, const Word& w);
// Total equality; both sides must carry abelianizations.
bool c1_equal(const C1Element& a, const C1Element& b);
// The degraded comparison used when no coset table exists.
bool c1_boundary_equal(const C1Element& a, const C1Element& b);

C1Element c1_multiply(const Skeleton& sk, const CosetTable* table, const C1Element& a,
                      const C1Element& b);
C1Element c1_invert(const Skeleton& sk, const CosetTable* table, const C1Element& a);
// Action of g in F(X0): conjugation of the representative by s0(g).
C1Element c1_act(const Skeleton& sk, const CosetTable* table, const Word& g,
                 const C1Element& a);

// Normal form in C2, the free G-module on the identity basis: finitely many
// ZG coordinates keyed by identity name.  The zero map is the class of the
// identity element.
struct C2Element {
    std::map<std::string, GroupRingElement> coords;

    bool is_zero() const { return coords.empty(); }
    auto operator<=>(const C2Element&) const = default;
};

// Normal form of a level-2 Moore word: each non-degenerate identity-born
// letter y^e at position p contributes e * class(d1 d2 (prefix_p)) to the y
// coordinate; every other letter contributes zero.
C2Element c2_normal_form(const Skeleton& sk, const CosetTable& table, const Word& w);
C2Element c2_add(const C2Element& a, const C2Element& b);
C2Element c2_act(const CosetTable& table, int g, const C2Element& a);
std::string render_c2(const CosetTable& table, const C2Element& a);

// Boundary maps of the crossed complex: d2 sends a level-2 word (or a C2
// normal form) to C1 via its last face; d1 is the cached free boundary.
C1Element boundary_d2(const Skeleton& sk, const CosetTable* table, const Word& w);
C1Element boundary_d2(const Skeleton& sk, const CosetTable& table, const C2Element& e);
Word boundary_d1(const C1Element& a);

struct CheckReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// Crossed-module axiom checks over any candidate structure providing
//   Base, Fiber, boundary(Fiber)->Base, act(Base,Fiber)->Fiber,
//   conj_base(Base,Base)->Base, mul_fiber, inv_fiber,
//   equal_base, equal_fiber, show_base, show_fiber.
// CM1: boundary(act(g, c)) = g boundary(c) g^-1.
template <typename S>
CheckReport cm1_check(const S& s,
                      const std::vector<std::pair<typename S::Base, typename S::Fiber>>& samples) {
    CheckReport r;
    for (const auto& [g, c] : samples) {
        ++r.checked;
        auto lhs = s.boundary(s.act(g, c));
        auto rhs = s.conj_base(g, s.boundary(c));
        if (!s.equal_base(lhs, rhs) && r.failures.size() < 5)
            r.failures.push_back("CM1: " + s.show_base(lhs) + " != " + s.show_base(rhs));
        else if (!s.equal_base(lhs, rhs))
            r.failures.emplace_back("CM1 failure");
    }
    return r;
}

// CM2 (Peiffer identity): act(boundary(c), c') = c c' c^-1.
template <typename S>
CheckReport cm2_check(const S& s,
                      const std::vector<std::pair<typename S::Fiber, typename S::Fiber>>& samples) {
    CheckReport r;
    for (const auto& [c, cp] : samples) {
        ++r.checked;
        auto lhs = s.act(s.boundary(c), cp);
        auto rhs = s.mul_fiber(s.mul_fiber(c, cp), s.inv_fiber(c));
        if (!s.equal_fiber(lhs, rhs) && r.failures.size() < 5)
            r.failures.push_back("CM2: " + s.show_fiber(lhs) + " != " + s.show_fiber(rhs));
        else if (!s.equal_fiber(lhs, rhs))
            r.failures.emplace_back("CM2 failure");
    }
    return r;
}

// Classical example: a group acting on itself by conjugation with identity
// boundary.  Satisfies both axioms on the nose.
struct ConjugationCrossedModule {
    using Base = Word;
    using Fiber = Word;
    Word boundary(const Word& c) const { return c; }
    Word act(const Word& g, const Word& c) const { return conjugate(g, c); }
    Word conj_base(const Word& g, const Word& b) const { return conjugate(g, b); }
    Word mul_fiber(const Word& a, const Word& b) const { return multiply(a, b); }
    Word inv_fiber(const Word& a) const { return invert(a); }
    bool equal_base(const Word& a, const Word& b) const { return a == b; }
    bool equal_fiber(const Word& a, const Word& b) const { return a == b; }
    std::string show_base(const Word& a) const { return render_word(a); }
    std::string show_fiber(const Word& a) const { return render_word(a); }
};

// Same boundary with the trivial action: violates CM1 on nonabelian input.
struct TrivialActionModule : ConjugationCrossedModule {
    Word act(const Word&, const Word& c) const { return c; }
};

// (C1, F(X0), d1) with the s0-conjugation action, compared under the
// (boundary, abelianization) pair; boundary-only when table is null.
struct C1CrossedModule {
    const Skeleton* sk;
    const CosetTable* table;  // may be null
    using Base = Word;
    using Fiber = C1Element;
    C1Element make(const Word& w) const { return c1_element(*sk, table, w); }
    Word boundary(const C1Element& c) const { return c.boundary; }
    C1Element act(const Word& g, const C1Element& c) const { return c1_act(*sk, table, g, c); }
    Word conj_base(const Word& g, const Word& b) const { return conjugate(g, b); }
    C1Element mul_fiber(const C1Element& a, const C1Element& b) const {
        return c1_multiply(*sk, table, a, b);
    }
    C1Element inv_fiber(const C1Element& a) const { return c1_invert(*sk, table, a); }
    bool equal_base(const Word& a, const Word& b) const { return a == b; }
    bool equal_fiber(const C1Element& a, const C1Element& b) const {
        return table ? c1_equal(a, b) : c1_boundary_equal(a, b);
    }
    std::string show_base(const Word& a) const { return render_word(a); }
    std::string show_fiber(const C1Element& a) const {
        return render_conjugate_form(a.representative);
    }
};

struct CrossedComplexReport {
    std::vector<std::string> c0_basis;
    std::vector<std::string> c1_basis;
    std::vector<std::string> c2_basis;
    std::vector<std::pair<std::string, std::string>> d1_table;
    std::vector<std::pair<std::string, std::string>> d2_table;
    bool d1_d2_trivial = true;
    bool has_table = false;
    int group_order = 0;
    int overflow_bound = 0;
    CheckReport cm1;
    CheckReport cm2;
    bool cm2_partial = false;

    bool passed() const { return d1_d2_trivial && cm1.passed() && cm2.passed(); }
};

// Assemble the two-stage crossed complex C2 -> C1 -> C0 of the skeleton,
// running the boundary and axiom checks.  A null table degrades the report
// to boundary-only comparisons.
CrossedComplexReport crossed_complex(const Skeleton& sk, const CosetTable* table,
                                     int samples, std::uint64_t seed,
                                     int overflow_bound = 0);

// Leveled generator listing with boundary words: sections W1 (generators),
// W2 (name = relator word), W3 (name = identity word in conjugated-relator
// form), then a line naming each W3 entry whose boundary reduces to 1.
std::string export_word_system(const Skeleton& sk);

}  // namespace crossres

#endif

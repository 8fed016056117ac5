#include "crossres/crossed.hpp"

#include "crossres/peiffer.hpp"
#include "crossres/rng.hpp"

namespace crossres {

namespace {

// d_0 on level-1 words: kills relator letters, sends s0(x) to x.  Kept local
// so conjugate-term extraction does not need a built skeleton.
Word level1_retraction(const Word& w) {
    if (w.level != 1) throw StructuralError("expected a level-1 word");
    std::vector<Letter> out;
    for (const Letter& l : w.letters) {
        if (l.symbol.birth_level == 0)
            out.push_back(Letter{
                GeneratorSymbol{l.symbol.basis_id, 0, MonotoneSurjection::identity(0)},
                l.exponent});
        else if (l.symbol.birth_level != 1)
            throw StructuralError("level-1 word holds a letter born above level 1");
    }
    return reduce(0, std::move(out));
}

}  // namespace

std::vector<ConjugatedTerm> conjugate_terms(const Word& w) {
    if (!level1_retraction(w).empty())
        throw ValidationError(
            "word is not in the normal closure of the relator generators: " + render_word(w));
    std::vector<ConjugatedTerm> terms;
    std::vector<Letter> prefix;
    for (const Letter& l : w.letters) {
        if (l.symbol.birth_level == 1) {
            Word conj = level1_retraction(Word{1, prefix});
            if (!terms.empty() && terms.back().relator == l.symbol.basis_id &&
                terms.back().conjugator == conj &&
                (terms.back().exponent > 0) == (l.exponent > 0)) {
                terms.back().exponent += l.exponent;
            } else {
                terms.push_back(ConjugatedTerm{std::move(conj), l.symbol.basis_id, l.exponent});
            }
        }
        prefix.push_back(l);
    }
    return terms;
}

std::string render_conjugate_form(const Word& w) {
    std::vector<ConjugatedTerm> terms = conjugate_terms(w);
    if (terms.empty()) return "1";
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += ' ';
        if (t.conjugator.empty())
            out += t.relator;
        else
            out += "(" + render_word(t.conjugator) + ">" + t.relator + ")";
        if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
    }
    return out;
}

C1Element c1_element(const Skeleton& sk, const CosetTable* table, const Word& w) {
    std::vector<ConjugatedTerm> terms = conjugate_terms(w);  // shape check
    C1Element e;
    e.representative = w;
    e.boundary = sk.face(1, w);
    if (table) {
        e.has_ab = true;
        for (const auto& t : terms) {
            int cls = table->class_of(t.conjugator);
            auto [it, inserted] =
                e.ab.try_emplace(t.relator, GroupRingElement::zero(t.relator));
            it->second = ring_add(it->second,
                                  GroupRingElement::unit(t.relator, cls, t.exponent));
        }
        for (auto it = e.ab.begin(); it != e.ab.end();)
            it = it->second.is_zero() ? e.ab.erase(it) : std::next(it);
    }
    return e;
}

bool c1_equal(const C1Element& a, const C1Element& b) {
    if (!a.has_ab || !b.has_ab)
        throw StructuralError("c1_equal: abelianization missing (no coset table)");
    return a.boundary == b.boundary && a.ab == b.ab;
}

bool c1_boundary_equal(const C1Element& a, const C1Element& b) {
    return a.boundary == b.boundary;
}

C1Element c1_multiply(const Skeleton& sk, const CosetTable* table, const C1Element& a,
                      const C1Element& b) {
    return c1_element(sk, table, multiply(a.representative, b.representative));
}

C1Element c1_invert(const Skeleton& sk, const CosetTable* table, const C1Element& a) {
    return c1_element(sk, table, invert(a.representative));
}

C1Element c1_act(const Skeleton& sk, const CosetTable* table, const Word& g,
                 const C1Element& a) {
    if (g.level != 0) throw StructuralError("c1_act: conjugator must be a level-0 word");
    return c1_element(sk, table, conjugate(sk.degeneracy(0, g), a.representative));
}

C2Element c2_normal_form(const Skeleton& sk, const CosetTable& table, const Word& w) {
    if (w.level != 2) throw ValidationError("c2_normal_form: expects a level-2 word");
    if (!sk.moore_member(w))
        throw ValidationError("c2_normal_form: not a Moore word: " + render_word(w));
    C2Element out;
    int cls = 1;  // class of d1 d2 of the prefix read so far
    for (const Letter& l : w.letters) {
        if (l.symbol.birth_level == 2 && !l.symbol.degenerate()) {
            auto [it, inserted] =
                out.coords.try_emplace(l.symbol.basis_id,
                                       GroupRingElement::zero(l.symbol.basis_id));
            it->second = ring_add(
                it->second, GroupRingElement::unit(l.symbol.basis_id, cls, l.exponent));
        }
        Word step{2, {l}};
        cls = table.compose(cls, table.class_of(sk.face(1, sk.face(2, step))));
    }
    for (auto it = out.coords.begin(); it != out.coords.end();)
        it = it->second.is_zero() ? out.coords.erase(it) : std::next(it);
    return out;
}

C2Element c2_add(const C2Element& a, const C2Element& b) {
    C2Element out = a;
    for (const auto& [name, elem] : b.coords) {
        auto [it, inserted] = out.coords.try_emplace(name, GroupRingElement::zero(name));
        it->second = ring_add(it->second, elem);
        if (it->second.is_zero()) out.coords.erase(it);
    }
    return out;
}

C2Element c2_act(const CosetTable& table, int g, const C2Element& a) {
    C2Element out;
    for (const auto& [name, elem] : a.coords) out.coords.emplace(name, ring_act(table, g, elem));
    return out;
}

std::string render_c2(const CosetTable& table, const C2Element& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [name, elem] : a.coords) {
        if (!out.empty()) out += " + ";
        out += "(" + render_ring_element(table, elem) + ")*" + name;
    }
    return out;
}

C1Element boundary_d2(const Skeleton& sk, const CosetTable* table, const Word& w) {
    if (w.level != 2) throw StructuralError("boundary_d2: expects a level-2 word");
    Word image = sk.face(2, w);
    if (!level1_retraction(image).empty())
        throw StructuralError(
            "boundary_d2: face image left the conjugated-relator shape: " +
            render_word(image));
    return c1_element(sk, table, image);
}

C1Element boundary_d2(const Skeleton& sk, const CosetTable& table, const C2Element& e) {
    Word rep = Word::identity(1);
    for (const auto& [name, elem] : e.coords) {
        const Word* theta = sk.attached_word(2, name);
        if (!theta) throw StructuralError("boundary_d2: unknown identity basis '" + name + "'");
        for (const auto& [coset, coeff] : elem.coeffs) {
            Word lifted = conjugate(sk.degeneracy(0, table.representative(coset)), *theta);
            rep = multiply(rep, power(lifted, coeff));
        }
    }
    return c1_element(sk, &table, rep);
}

Word boundary_d1(const C1Element& a) { return a.boundary; }

CrossedComplexReport crossed_complex(const Skeleton& sk, const CosetTable* table,
                                     int samples, std::uint64_t seed, int overflow_bound) {
    CrossedComplexReport report;
    report.c0_basis = sk.data().presentation.generators;
    for (const auto& [name, word] : sk.data().presentation.relators) {
        report.c1_basis.push_back(name);
        report.d1_table.emplace_back(name, render_word(word));
    }
    for (const auto& [name, word] : sk.data().identities) {
        report.c2_basis.push_back(name);
        report.d2_table.emplace_back(name, render_conjugate_form(word));
        if (!sk.face(1, word).empty()) report.d1_d2_trivial = false;
    }
    report.has_table = table != nullptr;
    report.group_order = table ? table->size() : 0;
    report.overflow_bound = overflow_bound;
    report.cm2_partial = table == nullptr;

    C1CrossedModule cm{&sk, table};
    Rng rng(seed);
    std::vector<std::pair<Word, C1Element>> cm1_samples;
    std::vector<std::pair<C1Element, C1Element>> cm2_samples;
    for (int k = 0; k < samples; ++k) {
        cm1_samples.emplace_back(sk.sample_word(0, rng, 8),
                                 cm.make(sample_moore_word(sk, 1, rng)));
        cm2_samples.emplace_back(cm.make(sample_moore_word(sk, 1, rng)),
                                 cm.make(sample_moore_word(sk, 1, rng)));
    }
    report.cm1 = cm1_check(cm, cm1_samples);
    report.cm2 = cm2_check(cm, cm2_samples);
    return report;
}

std::string export_word_system(const Skeleton& sk) {
    std::string out = "W1:\n";
    for (const auto& g : sk.data().presentation.generators) out += g + "\n";
    out += "W2:\n";
    for (const auto& [name, word] : sk.data().presentation.relators)
        out += name + " = " + render_word(word) + "\n";
    if (!sk.data().identities.empty()) {
        out += "W3:\n";
        std::string trivial;
        for (const auto& [name, word] : sk.data().identities) {
            out += name + " = " + render_conjugate_form(word) + "\n";
            if (!sk.face(1, word).empty())
                throw StructuralError("word system: boundary of '" + name +
                                      "' does not reduce to 1");
            trivial += (trivial.empty() ? "" : " ") + name;
        }
        out += "trivial-boundaries: " + trivial + "\n";
    }
    return out;
}

}  // namespace crossres

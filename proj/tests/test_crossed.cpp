#include <doctest.h>

#include "crossres/crossed.hpp"
#include "crossres/peiffer.hpp"
#include "oracles.hpp"

using namespace crossres;
using oracles::load_skeleton;

namespace {

struct Setup {
    Skeleton sk;
    CosetTable table;
    explicit Setup(const char* doc)
        : sk(load_skeleton(doc)),
          table(CosetTable::enumerate(sk.data().presentation, 1000)) {}
};

}  // namespace

TEST_CASE("conjugate terms and their rendering") {
    Setup s("a2.pres");
    const Word& i1 = s.sk.data().identities[0].second;
    auto terms = conjugate_terms(i1);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].relator == "r");
    CHECK(terms[0].exponent == -1);
    CHECK(terms[0].conjugator.empty());
    CHECK(terms[1].conjugator == s.sk.generator("a"));
    CHECK(render_conjugate_form(i1) == "r^-1 (a>r)");
    CHECK(render_conjugate_form(Word::identity(1)) == "1");

    // bare degenerate letters are outside the conjugated-relator shape
    CHECK_THROWS_AS(conjugate_terms(s.sk.degeneracy(0, s.sk.generator("a"))), ValidationError);
}

TEST_CASE("c1 equality: Peiffer moves vanish, conjugation is detected") {
    Setup s("a2.pres");
    Rng rng(51);

    // multiplying by a first-dimensional Peiffer generator does not move the class
    for (int t = 0; t < 60; ++t) {
        Word w = sample_moore_word(s.sk, 1, rng);
        Word u = sample_moore_word(s.sk, 1, rng);
        Word v = sample_kernel_d1_word(s.sk, rng);
        Word p = p1_generator(s.sk, u, v);
        CHECK(c1_equal(c1_element(s.sk, &s.table, w),
                       c1_element(s.sk, &s.table, multiply(w, p))));
    }

    // the Peiffer identity holds under the pair oracle
    for (int t = 0; t < 60; ++t) {
        Word c = sample_moore_word(s.sk, 1, rng);
        Word cp = sample_moore_word(s.sk, 1, rng);
        Word lhs = conjugate(s.sk.degeneracy(0, s.sk.face(1, c)), cp);
        Word rhs = multiply(multiply(c, cp), invert(c));
        CHECK(c1_equal(c1_element(s.sk, &s.table, lhs), c1_element(s.sk, &s.table, rhs)));
    }

    // y_r and its s0(a)-conjugate share a boundary but differ in C1
    Word y = s.sk.generator("r");
    Word conj = conjugate(s.sk.degeneracy(0, s.sk.generator("a")), y);
    C1Element ey = c1_element(s.sk, &s.table, y);
    C1Element ec = c1_element(s.sk, &s.table, conj);
    CHECK(ey.boundary == ec.boundary);
    CHECK_FALSE(c1_equal(ey, ec));
    CHECK(c1_boundary_equal(ey, ec));
}

TEST_CASE("c1 equality is a congruence") {
    Setup s("s3.pres");
    Rng rng(52);
    for (int t = 0; t < 40; ++t) {
        Word x = sample_moore_word(s.sk, 1, rng);
        Word px = p1_generator(s.sk, sample_moore_word(s.sk, 1, rng),
                               sample_kernel_d1_word(s.sk, rng));
        Word y = sample_moore_word(s.sk, 1, rng);
        C1Element ex = c1_element(s.sk, &s.table, x);
        C1Element ex2 = c1_element(s.sk, &s.table, multiply(x, px));
        C1Element ey = c1_element(s.sk, &s.table, y);
        REQUIRE(c1_equal(ex, ex2));
        CHECK(c1_equal(c1_multiply(s.sk, &s.table, ex, ey),
                       c1_multiply(s.sk, &s.table, ex2, ey)));
        Word g = s.sk.sample_word(0, rng, 6);
        CHECK(c1_equal(c1_act(s.sk, &s.table, g, ex), c1_act(s.sk, &s.table, g, ex2)));
        CHECK(c1_equal(c1_multiply(s.sk, &s.table, ex, c1_invert(s.sk, &s.table, ex)),
                       c1_element(s.sk, &s.table, Word::identity(1))));
    }
}

TEST_CASE("crossed module axiom checkers") {
    // conjugation module: both axioms on the nose
    ConjugationCrossedModule conj_cm;
    Rng rng(53);
    Skeleton sk = load_skeleton("s3.pres");
    std::vector<std::pair<Word, Word>> pairs;
    for (int t = 0; t < 80; ++t)
        pairs.emplace_back(sk.sample_word(0, rng, 8), sk.sample_word(0, rng, 8));
    CHECK(cm1_check(conj_cm, pairs).passed());
    CHECK(cm2_check(conj_cm, pairs).passed());

    // trivial action with identity boundary fails CM1 on nonabelian input
    TrivialActionModule broken;
    Word a = sk.generator("a"), b = sk.generator("b");
    std::vector<std::pair<Word, Word>> witness{{a, b}};
    CheckReport r = cm1_check(broken, witness);
    REQUIRE_FALSE(r.passed());
    CHECK(r.failures[0].find("CM1") == 0);

    // (C1, C0, d1) under the pair oracle
    for (const char* doc : {"a2.pres", "s3.pres"}) {
        Setup s(doc);
        C1CrossedModule cm{&s.sk, &s.table};
        Rng rng2(54);
        std::vector<std::pair<Word, C1Element>> cm1_samples;
        std::vector<std::pair<C1Element, C1Element>> cm2_samples;
        for (int t = 0; t < 60; ++t) {
            cm1_samples.emplace_back(s.sk.sample_word(0, rng2, 6),
                                     cm.make(sample_moore_word(s.sk, 1, rng2)));
            cm2_samples.emplace_back(cm.make(sample_moore_word(s.sk, 1, rng2)),
                                     cm.make(sample_moore_word(s.sk, 1, rng2)));
        }
        CHECK(cm1_check(cm, cm1_samples).passed());
        CHECK(cm2_check(cm, cm2_samples).passed());
    }
}

TEST_CASE("c2 normal forms") {
    Setup s("a2.pres");
    Rng rng(55);

    // single conjugated identity letter
    Word y = s.sk.generator("i1");
    for (int t = 0; t < 40; ++t) {
        Word u = s.sk.sample_word(2, rng, 6);
        int sign = rng.coin() ? 1 : -1;
        Word w = conjugate(u, sign == 1 ? y : invert(y));
        int cls = s.table.class_of(s.sk.face(1, s.sk.face(2, u)));
        C2Element nf = c2_normal_form(s.sk, s.table, w);
        REQUIRE(nf.coords.size() == 1);
        CHECK(nf.coords.at("i1") == GroupRingElement::unit("i1", cls, sign));
    }

    // additivity
    for (int t = 0; t < 60; ++t) {
        Word w1 = sample_moore_word(s.sk, 2, rng);
        Word w2 = sample_moore_word(s.sk, 2, rng);
        CHECK(c2_normal_form(s.sk, s.table, multiply(w1, w2)) ==
              c2_add(c2_normal_form(s.sk, s.table, w1), c2_normal_form(s.sk, s.table, w2)));
    }

    // distinct basis tags stay independent
    Setup s3("s3.pres");
    // s3.pres has one identity; fabricate a two-identity document inline
    ConstructionData two = s3.sk.data();
    Word ys = s3.sk.generator("s");
    two.identities.emplace_back(
        "i2", multiply(invert(ys), conjugate(s3.sk.degeneracy(0, s3.sk.generator("b")), ys)));
    Skeleton sk2 = Skeleton::build(two, 3);
    CosetTable t2 = CosetTable::enumerate(sk2.data().presentation, 1000);
    Word mix = multiply(sk2.generator("i1"), invert(sk2.generator("i2")));
    C2Element nf = c2_normal_form(sk2, t2, mix);
    REQUIRE(nf.coords.size() == 2);
    CHECK(nf.coords.at("i1") == GroupRingElement::unit("i1", 1, 1));
    CHECK(nf.coords.at("i2") == GroupRingElement::unit("i2", 1, -1));

    // rejects non-Moore input
    CHECK_THROWS_AS(c2_normal_form(s.sk, s.table, s.sk.degeneracy(0, s.sk.generator("r"))),
                    ValidationError);
}

TEST_CASE("boundary maps") {
    Setup s("a2.pres");
    Word y = s.sk.generator("i1");

    // d1 . d2 kills every identity generator
    for (const char* doc : {"a2.pres", "a3.pres", "s3.pres"}) {
        Setup sd(doc);
        for (const auto& [name, word] : sd.sk.data().identities) {
            C1Element b = boundary_d2(sd.sk, &sd.table, sd.sk.generator(name));
            CHECK(boundary_d1(b).empty());
        }
    }

    // d2 of the zero element is the identity of C1
    C1Element zero = boundary_d2(s.sk, s.table, C2Element{});
    CHECK(zero.representative.empty());
    CHECK(zero.ab.empty());

    // a face image outside the conjugated-relator shape is surfaced loudly
    Word stray = s.sk.degeneracy(1, s.sk.degeneracy(0, s.sk.generator("a")));
    CHECK_THROWS_AS(boundary_d2(s.sk, &s.table, stray), StructuralError);

    // explicit abelianization of d2(i1): ([a] - 1) * r
    C1Element d2 = boundary_d2(s.sk, &s.table, y);
    CHECK(d2.boundary.empty());
    int ga = s.table.class_of(s.sk.generator("a"));
    GroupRingElement expect =
        ring_add(GroupRingElement::unit("r", ga, 1), GroupRingElement::unit("r", 1, -1));
    REQUIRE(d2.ab.size() == 1);
    CHECK(d2.ab.at("r") == expect);

    // equivariance: d2(g . e_y) equals the conjugate of d2(e_y) by a lift
    Rng rng(56);
    for (int t = 0; t < 30; ++t) {
        Word g = s.sk.sample_word(0, rng, 6);
        int cls = s.table.class_of(g);
        C2Element ey = c2_normal_form(s.sk, s.table, s.sk.generator("i1"));
        C1Element lhs = boundary_d2(s.sk, s.table, c2_act(s.table, cls, ey));
        C1Element rhs = c1_act(s.sk, &s.table, s.table.representative(cls),
                               boundary_d2(s.sk, s.table, ey));
        CHECK(c1_equal(lhs, rhs));
    }
}

TEST_CASE("crossed complex reports") {
    Setup s("a2.pres");
    CrossedComplexReport report = crossed_complex(s.sk, &s.table, 60, 42);
    CHECK(report.passed());
    CHECK(report.c0_basis == std::vector<std::string>{"a"});
    CHECK(report.c1_basis == std::vector<std::string>{"r"});
    CHECK(report.c2_basis == std::vector<std::string>{"i1"});
    CHECK(report.group_order == 2);
    CHECK(report.d1_d2_trivial);
    REQUIRE(report.d2_table.size() == 1);
    CHECK(report.d2_table[0].second == "r^-1 (a>r)");

    // no identity data truncates the complex at C1
    Skeleton a1 = load_skeleton("a1.pres");
    CosetTable t1 = CosetTable::enumerate(a1.data().presentation, 1000);
    CrossedComplexReport r1 = crossed_complex(a1, &t1, 40, 42);
    CHECK(r1.passed());
    CHECK(r1.c2_basis.empty());

    Setup s3("s3.pres");
    CrossedComplexReport r3 = crossed_complex(s3.sk, &s3.table, 60, 42);
    CHECK(r3.passed());
    CHECK(r3.group_order == 6);

    // degraded mode without a table
    CrossedComplexReport partial = crossed_complex(s.sk, nullptr, 40, 42, 100);
    CHECK_FALSE(partial.has_table);
    CHECK(partial.cm2_partial);
    CHECK(partial.passed());
}

TEST_CASE("word system export") {
    Skeleton sk = load_skeleton("a2.pres");
    CHECK(export_word_system(sk) ==
          "W1:\na\nW2:\nr = a^2\nW3:\ni1 = r^-1 (a>r)\ntrivial-boundaries: i1\n");

    Skeleton a1 = load_skeleton("a1.pres");
    CHECK(export_word_system(a1) == "W1:\na\nW2:\nr = a\n");

    // parsing the exported W1/W2 sections back as a presentation reproduces
    // the original one
    for (const char* doc : {"a2.pres", "s3.pres"}) {
        Skeleton s2 = load_skeleton(doc);
        std::string exported = export_word_system(s2);
        std::string gens, rels;
        std::string* cur = nullptr;
        std::istringstream lines(exported);
        std::string line;
        while (std::getline(lines, line)) {
            if (line == "W1:") {
                cur = &gens;
            } else if (line == "W2:") {
                cur = &rels;
            } else if (line == "W3:" || line.rfind("trivial-", 0) == 0) {
                cur = nullptr;
            } else if (cur == &gens) {
                gens += (gens.empty() ? "" : " ") + line;
            } else if (cur == &rels) {
                auto eq = line.find(" = ");
                rels += line.substr(0, eq) + ": " + line.substr(eq + 3) + "\n";
            }
        }
        InputDocument round =
            parse_document("[generators]\n" + gens + "\n[relators]\n" + rels);
        CHECK(round.generators == s2.data().presentation.generators);
        CHECK(round.relators == s2.data().presentation.relators);
    }
}

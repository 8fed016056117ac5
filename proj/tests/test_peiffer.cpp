#include <doctest.h>

#include "crossres/crossed.hpp"
#include "crossres/peiffer.hpp"
#include "oracles.hpp"

using namespace crossres;
using oracles::load_skeleton;

TEST_CASE("samplers land in the right kernels") {
    Skeleton sk = load_skeleton("s3.pres");
    Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        Word u = sample_moore_word(sk, 1, rng);
        CHECK(u.level == 1);
        CHECK(sk.moore_member(u));
        Word w = sample_moore_word(sk, 2, rng);
        CHECK(w.level == 2);
        CHECK(sk.moore_member(w));
        Word v = sample_kernel_d1_word(sk, rng);
        CHECK(sk.face(1, v).empty());
    }
}

TEST_CASE("adjacent pairing: units, membership, boundary identity") {
    Skeleton sk = load_skeleton("s3.pres");
    Rng rng(42);
    Word x = sample_moore_word(sk, 1, rng);
    CHECK(pairing_adjacent(sk, 1, x, Word::identity(1)).empty());
    CHECK(pairing_adjacent(sk, 1, Word::identity(1), x).empty());

    for (int n = 1; n <= 2; ++n) {
        for (int t = 0; t < 60; ++t) {
            Word u = sample_moore_word(sk, n, rng);
            Word v = sample_moore_word(sk, n, rng);
            Word f = pairing_adjacent(sk, n, u, v);
            CHECK(f.level == n + 1);
            CHECK(sk.moore_member(f));
            CHECK(sk.face(n + 1, f) == pairing_adjacent_boundary_formula(sk, n, u, v));
        }
    }

    // non-Moore input is rejected
    Word bad = sk.degeneracy(0, sk.generator("a"));
    CHECK_THROWS_AS(pairing_adjacent(sk, 1, bad, x), ValidationError);
}

TEST_CASE("tower pairing: units and boundary identity at (2,1)") {
    Skeleton sk = load_skeleton("s3.pres");
    Rng rng(43);
    Word x = sample_moore_word(sk, 1, rng);
    CHECK(pairing_tower(sk, 2, 1, x, Word::identity(2)).empty());

    for (int t = 0; t < 60; ++t) {
        Word u = sample_moore_word(sk, 1, rng);
        Word v = sample_moore_word(sk, 2, rng);
        Word f = pairing_tower(sk, 2, 1, u, v);
        CHECK(f.level == 3);
        CHECK(sk.moore_member(f));
        CHECK(sk.face(3, f) == pairing_tower_boundary_formula(sk, 2, 1, u, v));
    }
    // the equal-level case (2,2) is in range as well
    for (int t = 0; t < 30; ++t) {
        Word u = sample_moore_word(sk, 2, rng);
        Word v = sample_moore_word(sk, 2, rng);
        Word f = pairing_tower(sk, 2, 2, u, v);
        CHECK(sk.moore_member(f));
        CHECK(sk.face(3, f) == pairing_tower_boundary_formula(sk, 2, 2, u, v));
    }
    CHECK_THROWS_AS(pairing_tower(sk, 3, 1, x, Word::identity(3)), ValidationError);
    CHECK_THROWS_AS(pairing_tower(sk, 1, 0, x, x), ValidationError);
}

TEST_CASE("tower pairing at (1,1) degenerates to the adjacent boundary") {
    Skeleton sk = load_skeleton("s3.pres");
    Rng rng(44);
    for (int t = 0; t < 60; ++t) {
        Word u = sample_moore_word(sk, 1, rng);
        Word v = sample_moore_word(sk, 1, rng);
        Word tower = pairing_tower(sk, 1, 1, u, v);
        Word adj = pairing_adjacent(sk, 1, u, v);
        // different representatives, identical last faces
        CHECK(sk.face(2, tower) == sk.face(2, adj));
        CHECK(sk.face(2, tower) == pairing_tower_boundary_formula(sk, 1, 1, u, v));
    }
}

TEST_CASE("q2 generators") {
    Skeleton sk = load_skeleton("a2.pres");
    CosetTable table = CosetTable::enumerate(sk.data().presentation, 1000);
    Rng rng(45);
    CHECK(q2_generator(sk, Word::identity(1), sample_moore_word(sk, 1, rng)).empty());
    for (int t = 0; t < 60; ++t) {
        Word q = q2_generator(sk, sample_moore_word(sk, 1, rng), sample_moore_word(sk, 1, rng));
        CHECK(sk.moore_member(q));
        CHECK(c2_normal_form(sk, table, q).is_zero());
    }
    CHECK_THROWS_AS(q2_generator(sk, sk.degeneracy(0, sk.generator("a")), Word::identity(1)),
                    ValidationError);
}

TEST_CASE("p1 generators") {
    Skeleton sk = load_skeleton("s3.pres");
    Rng rng(46);

    // u = y_r, v = y_s^-1 s0(d1 y_s) satisfy the kernel preconditions
    Word u = sk.generator("r");
    Word ys = sk.generator("s");
    Word v = multiply(invert(ys), sk.degeneracy(0, sk.face(1, ys)));
    CHECK(sk.face(0, u).empty());
    CHECK(sk.face(1, v).empty());
    Word p = p1_generator(sk, u, v);
    CHECK(p == commutator(u, v));

    CHECK(p1_generator(sk, u, Word::identity(1)).empty());

    // boundary of [u, v] is trivial whenever u is a Moore word
    for (int t = 0; t < 60; ++t) {
        Word uu = sample_moore_word(sk, 1, rng);
        Word vv = sample_kernel_d1_word(sk, rng);
        CHECK(sk.face(1, p1_generator(sk, uu, vv)).empty());
    }

    CHECK_THROWS_AS(p1_generator(sk, sk.degeneracy(0, sk.generator("a")), v), ValidationError);
    CHECK_THROWS_AS(p1_generator(sk, u, sk.generator("r")), ValidationError);
}

TEST_CASE("p2 families") {
    Skeleton sk = load_skeleton("s3.pres");
    CosetTable table = CosetTable::enumerate(sk.data().presentation, 1000);
    Rng rng(47);

    auto trivial = p2_families(sk, Word::identity(1), Word::identity(2), Word::identity(2));
    for (const Word& f : trivial) CHECK(f.empty());

    for (int t = 0; t < 25; ++t) {
        Word x = sample_moore_word(sk, 1, rng);
        Word y1 = sample_moore_word(sk, 2, rng);
        Word y2 = sample_moore_word(sk, 2, rng);
        auto fams = p2_families(sk, x, y1, y2);
        for (const Word& f : fams) {
            CHECK(sk.moore_member(f));
            CHECK(c2_normal_form(sk, table, f).is_zero());
        }
    }

    CHECK_THROWS_AS(
        p2_families(sk, sk.generator("r"), sk.degeneracy(1, sk.generator("r")), Word::identity(2)),
        ValidationError);
}

TEST_CASE("commutativity of C2 through the pairing") {
    // d3 of the adjacent pairing witnesses commutativity: its normal form is
    // zero, so xy and yx have equal normal forms.
    Skeleton sk = load_skeleton("a2.pres");
    CosetTable table = CosetTable::enumerate(sk.data().presentation, 1000);
    Rng rng(48);
    for (int t = 0; t < 40; ++t) {
        Word x = sample_moore_word(sk, 2, rng);
        Word y = sample_moore_word(sk, 2, rng);
        CHECK(c2_normal_form(sk, table, multiply(x, y)) ==
              c2_normal_form(sk, table, multiply(y, x)));
    }
}

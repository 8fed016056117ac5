#include <doctest.h>

#include "crossres/crossed.hpp"
#include "crossres/parser.hpp"
#include "oracles.hpp"

using namespace crossres;
using oracles::load_doc;
using oracles::read_file;

TEST_CASE("parse: basic presentation") {
    InputDocument doc = parse_document("[generators]\na\n[relators]\nr: a a\n");
    CHECK(doc.generators == std::vector<std::string>{"a"});
    REQUIRE(doc.relators.size() == 1);
    CHECK(doc.relators[0].first == "r");
    CHECK(render_word(doc.relators[0].second) == "a^2");
    CHECK(doc.identities.empty());
}

TEST_CASE("parse: identity words expand conjugated terms") {
    InputDocument doc =
        parse_document("[generators]\na\n[relators]\nr: a a\n[identities]\ni1: r^-1 (a>r)\n");
    REQUIRE(doc.identities.size() == 1);
    const Word& w = doc.identities[0].second;
    REQUIRE(w.size() == 4);
    CHECK(w.letters[0].symbol.basis_id == "r");
    CHECK(w.letters[0].exponent == -1);
    CHECK(w.letters[1].symbol.basis_id == "a");
    CHECK(w.letters[1].symbol.birth_level == 0);
    CHECK(w.letters[2].symbol.basis_id == "r");
    CHECK(w.letters[3].exponent == -1);

    // exponents distribute inside conjugates; "1" is the empty word
    InputDocument doc2 = parse_document(
        "[generators]\na b\n[relators]\nr: a b^-2\n[identities]\ni1: 1\ni2: (a b>r)^2 (1>r)\n");
    CHECK(doc2.identities[0].second.empty());
    CHECK(render_conjugate_form(doc2.identities[1].second) == "(a b>r)^2 r");
}

TEST_CASE("parse: diagnosed failures") {
    auto expect_fail = [](const std::string& text, int line, const char* needle) {
        try {
            parse_document(text);
            FAIL_CHECK("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_fail("[generators]\na\n[relators]\nr: a a^0\n", 4, "zero exponent");
    expect_fail("[generators]\na\n[relators]\nr: a c\n", 4, "unknown generator");
    expect_fail("[generators]\na a\n[relators]\n", 2, "duplicate generator");
    expect_fail("[generators]\na\n[relators]\nr: a\nr: a\n", 5, "duplicate relator");
    expect_fail("[relators]\nr: a\n", 3, "missing [generators]");
    expect_fail("a b\n[generators]\na\n", 1, "before any section");
    expect_fail("[gens]\na\n", 1, "unknown section");
    expect_fail("[generators]\na\n[relators]\nr: a^x\n", 4, "integer exponent");
    expect_fail("[generators]\na\n[generators]\na\n", 3, "duplicate section");
    expect_fail("[generators]\na\nb\n[relators]\n", 3, "single line");
    expect_fail("[generators]\na\n[relators]\nr: a\n[identities]\ni: (a>q)\n", 6,
                "unknown relator");
    expect_fail("[generators]\na\n[relators]\nr: a\n[identities]\ni: a\n", 6,
                "products of conjugated relators");
    expect_fail("[generators]\na\n[relators]\nr: a\n[identities]\ni: 1 r\n", 6, "stand alone");
}

TEST_CASE("all bundled malformed documents are rejected") {
    for (const char* name :
         {"malformed/m1_zero_exponent.pres", "malformed/m2_unknown_name.pres",
          "malformed/m3_duplicate_name.pres", "malformed/m5_unclosed_term.pres"}) {
        CHECK_THROWS_AS(parse_document(read_file(oracles::data_path(name))), ParseError);
    }
    // m4 parses but fails identity validation
    InputDocument m4 = parse_document(read_file(oracles::data_path("malformed/m4_bad_identity.pres")));
    CHECK_THROWS_AS(Skeleton::build(m4.to_construction_data(), 3), ValidationError);
}

TEST_CASE("parse . render . parse is the identity") {
    for (const char* name : {"a1.pres", "a2.pres", "a3.pres", "s3.pres", "free2.pres"}) {
        InputDocument doc = load_doc(name);
        CHECK(parse_document(render_document(doc)) == doc);
    }
    // non-canonical spellings land on the same value
    InputDocument doc = parse_document(
        "[generators]\na b\n[relators]\nr: a a\ns: b a^-2 b\n[identities]\ni1: (a>r) (a>r) r^-1 r^-1\n");
    CHECK(parse_document(render_document(doc)) == doc);
    CHECK(render_conjugate_form(doc.identities[0].second) == "(a>r)^2 r^-2");
}

TEST_CASE("parse_word resolves names by level") {
    ConstructionData data = load_doc("a2.pres").to_construction_data();
    Skeleton sk = Skeleton::build(data, 3);

    CHECK(parse_word("a a^-1", 0, data).empty());
    CHECK(parse_word("r", 1, data) == sk.generator("r"));
    CHECK(parse_word("(a>r)", 1, data) ==
          conjugate(sk.degeneracy(0, sk.generator("a")), sk.generator("r")));
    CHECK(parse_word("s0(r)", 2, data) == sk.degeneracy(0, sk.generator("r")));
    CHECK(parse_word("s1(s0(a))^-2", 2, data) ==
          power(sk.degeneracy(1, sk.degeneracy(0, sk.generator("a"))), -2));
    CHECK(parse_word("i1", 2, data) == sk.generator("i1"));
    CHECK(parse_word("a", 2, data) ==
          sk.degeneracy(1, sk.degeneracy(0, sk.generator("a"))));
    CHECK(parse_word("1", 3, data) == Word::identity(3));

    CHECK_THROWS_AS(parse_word("r", 2, data), ParseError);       // needs s0(r) or s1(r)
    CHECK_THROWS_AS(parse_word("(a>r)", 0, data), ParseError);   // conjugates live at level 1
    CHECK_THROWS_AS(parse_word("s2(r)", 2, data), ParseError);   // index too large
    CHECK_THROWS_AS(parse_word("q", 1, data), ParseError);       // unknown name
}

TEST_CASE("garbage input raises ParseError and nothing else") {
    Rng rng(62);
    const std::string alphabet = "ab r:i^()>-01[]\n\t_";
    for (int t = 0; t < 500; ++t) {
        std::string text;
        int len = rng.below(80);
        for (int k = 0; k < len; ++k)
            text += alphabet[static_cast<std::size_t>(
                rng.below(static_cast<int>(alphabet.size())))];
        try {
            InputDocument doc = parse_document(text);
            // whatever parses must round-trip
            CHECK(parse_document(render_document(doc)) == doc);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("rendered symbols re-parse") {
    ConstructionData data = load_doc("s3.pres").to_construction_data();
    Skeleton sk = Skeleton::build(data, 3);
    Rng rng(61);
    for (int level = 0; level <= 3; ++level) {
        for (int t = 0; t < 40; ++t) {
            Word w = sk.sample_word(level, rng, 12);
            CHECK(parse_word(render_word(w), level, data) == w);
        }
    }
}

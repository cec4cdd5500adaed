#include <doctest.h>

#include <random>

#include "dw/word.hpp"

using namespace dw;

namespace {

Word random_word(std::mt19937& rng, int ngens, int len) {
    std::uniform_int_distribution<int> g(0, ngens - 1), s(0, 1);
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i) ls.push_back({g(rng), s(rng) ? 1 : -1});
    return Word(ls);
}

Endomorphism random_endo(std::mt19937& rng, int ngens, int len) {
    Endomorphism e;
    for (int i = 0; i < ngens; ++i) e.images.push_back(random_word(rng, ngens, len));
    return e;
}

}  // namespace

TEST_CASE("free reduction") {
    Word w1 = Word::gen(0) * Word::gen(0, -1);
    CHECK(w1.empty());
    Word w2 = Word::gen(0) * Word::gen(1) * Word::gen(1, -1) * Word::gen(0);
    CHECK(w2 == Word::gen(0, 2));
    Word w3 = Word::from_powers({{0, 1}, {1, 2}});
    CHECK(free_reduce(w3) == w3);  // already reduced
}

TEST_CASE("free reduction is idempotent and length-non-increasing") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<Letter> raw;
        std::uniform_int_distribution<int> g(0, 2), s(0, 1);
        int len = t % 17;
        for (int i = 0; i < len; ++i) raw.push_back({g(rng), s(rng) ? 1 : -1});
        Word w(raw);
        CHECK(w.length() <= raw.size());
        CHECK(free_reduce(w) == w);
        // no cancelling adjacent pair survives
        const auto& ls = w.letters();
        for (size_t i = 0; i + 1 < ls.size(); ++i)
            CHECK(!(ls[i].gen == ls[i + 1].gen && ls[i].exp == -ls[i + 1].exp));
    }
}

TEST_CASE("substitution matches the printed torus-link motion formulas") {
    // free group on u0=y, u1, u2, u3=x (n = 3); sigma_1: u1 -> u0 u1^-1 u2
    int n = 3;
    Endomorphism sigma1 = Endomorphism::identity(n + 1);
    sigma1.images[1] = Word::from_powers({{0, 1}, {1, -1}, {2, 1}});
    CHECK(substitute(Word::gen(1), sigma1) == Word::from_powers({{0, 1}, {1, -1}, {2, 1}}));
    CHECK(substitute(Word::gen(2), sigma1) == Word::gen(2));
    CHECK(substitute(Word::gen(n), sigma1) == Word::gen(n));  // x fixed

    // rho_1 (n = 2): x -> (y u1^-1) x (y u1^-1)^-1, y fixed
    Endomorphism rho1 = Endomorphism::identity(3);
    Word m = Word::gen(0) * Word::gen(1, -1);
    rho1.images[1] = m * Word::gen(1) * m.inverse();
    rho1.images[2] = m * Word::gen(2) * m.inverse();
    CHECK(substitute(Word::gen(2), rho1) ==
          Word::from_powers({{0, 1}, {1, -1}, {2, 1}, {1, 1}, {0, -1}}));
    CHECK(substitute(Word::gen(0), rho1) == Word::gen(0));
}

TEST_CASE("compose identities") {
    std::mt19937 rng(11);
    Endomorphism id = Endomorphism::identity(3);
    for (int t = 0; t < 20; ++t) {
        Endomorphism e = random_endo(rng, 3, 4);
        for (int g = 0; g < 3; ++g) {
            CHECK(compose(id, e).images[g] == e.images[g]);
            CHECK(compose(e, id).images[g] == e.images[g]);
        }
    }
}

TEST_CASE("substitute respects composition") {
    std::mt19937 rng(13);
    for (int t = 0; t < 100; ++t) {
        Endomorphism e1 = random_endo(rng, 3, 3), e2 = random_endo(rng, 3, 3);
        Word w = random_word(rng, 3, 6);
        CHECK(substitute(substitute(w, e2), e1) == substitute(w, compose(e1, e2)));
    }
}

TEST_CASE("presentation parsing") {
    Presentation P = parse_presentation("gens: x y\nrel: x^3 y^-2\n");
    CHECK(P.num_generators() == 2);
    REQUIRE(P.relators.size() == 1);
    CHECK(P.relators[0] == Word::from_powers({{0, 3}, {1, -2}}));

    Presentation Z4 = parse_presentation("gens: a\nrel: a^4\n");
    CHECK(Z4.relators[0] == Word::gen(0, 4));

    Presentation C = parse_presentation("# comment\ngens: a b\nrel: a b a^-1 b^-1\n");
    CHECK(C.relators[0].length() == 4);
}

TEST_CASE("presentation parse errors carry positions") {
    CHECK_THROWS_AS(parse_presentation(""), ParseError);
    CHECK_THROWS_AS(parse_presentation("rel: a\ngens: a\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a^x\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a a\n"), ParseError);
    try {
        parse_presentation("gens: a\nrel: b^2\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column > 1);
    }
}

TEST_CASE("serializer round trip") {
    std::string text = "gens: x y u1\nrel: x^3 y^-2\nrel: y^2 u1 y^-2 u1^-1\n";
    Presentation P = parse_presentation(text);
    Presentation Q = parse_presentation(serialize_presentation(P));
    CHECK(P.generator_names == Q.generator_names);
    REQUIRE(P.relators.size() == Q.relators.size());
    for (size_t i = 0; i < P.relators.size(); ++i) CHECK(P.relators[i] == Q.relators[i]);
}

#include "doctest.h"

#include <random>

#include "braidmoves/braid_word.hpp"
#include "braidmoves/garside.hpp"
#include "braidmoves/handle_reduction.hpp"
#include "support/random_words.hpp"

using namespace braidmoves;
using testsupport::equivalent_scramble;
using testsupport::insert_random_relator;
using testsupport::random_word;

TEST_CASE("normal form identifies the braid relation") {
    NormalForm a = normal_form(BraidWord(3, {1, 2, 1}));
    NormalForm b = normal_form(BraidWord(3, {2, 1, 2}));
    CHECK(a == b);
    CHECK(a.inf == 1);
    CHECK(a.factors.empty());  // both equal Delta
}

TEST_CASE("normal form of a trivial word is the identity") {
    NormalForm nf = normal_form(BraidWord(2, {1, -1}));
    CHECK(nf.inf == 0);
    CHECK(nf.factors.empty());
}

TEST_CASE("normal form distinguishes sigma1 sigma2 from sigma2 sigma1") {
    BraidWord a(3, {1, 2});
    BraidWord b(3, {2, 1});
    CHECK(normal_form(a) != normal_form(b));
    // cross-check with the handle-reduction oracle
    CHECK(!handle_trivial(compose(a, invert(b))));
}

TEST_CASE("equality: braid relation, far commutation, central Delta^2") {
    CHECK(equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
    CHECK(equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
    BraidWord d2 = compose(half_twist(3), half_twist(3));
    CHECK(equal(compose(d2, BraidWord(3, {1})), compose(BraidWord(3, {1}), d2)));
    CHECK_THROWS_AS(equal(BraidWord(2), BraidWord(3)), std::invalid_argument);
}

TEST_CASE("half twist words and degree") {
    CHECK(half_twist(2).letters() == std::vector<int>{1});
    CHECK(half_twist(3).letters() == std::vector<int>{1, 2, 1});
    CHECK(half_twist(1).letters().empty());
    for (int n = 1; n <= 7; ++n)
        CHECK(degree(half_twist(n)) == n * (n - 1) / 2);
}

TEST_CASE("normal form degree bookkeeping") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        BraidWord b = random_word(rng, 6, 0, 20);
        NormalForm nf = normal_form(b);
        int n = b.strands();
        int d = nf.inf * n * (n - 1) / 2;
        for (const auto& f : nf.factors)
            d += f.word_length();
        CHECK(d == degree(b));
        CHECK(equal(b, expand(nf)));
    }
}

TEST_CASE("positive decomposition") {
    SUBCASE("already positive") {
        BraidWord b(3, {1, 2, 2});
        auto pd = positive_decomposition(b);
        CHECK(pd.delta_power == 0);
        CHECK(equal(b, pd.positive_part));
    }
    SUBCASE("single negative generator in B2") {
        auto pd = positive_decomposition(BraidWord(2, {-1}));
        CHECK(pd.delta_power == 1);
        CHECK(pd.positive_part.empty());
    }
    SUBCASE("sigma1^-1 sigma2^-1 in B3") {
        BraidWord b(3, {-1, -2});
        auto pd = positive_decomposition(b);
        CHECK(pd.delta_power == 1);
        CHECK(pd.positive_part.letters() == std::vector<int>{1});
        BraidWord rebuilt = compose(invert(half_twist(3)), pd.positive_part);
        CHECK(equal(b, rebuilt));
    }
    SUBCASE("random words reassemble") {
        std::mt19937_64 rng(4242);
        for (int trial = 0; trial < 200; ++trial) {
            BraidWord b = random_word(rng, 5, 0, 14);
            auto pd = positive_decomposition(b);
            CHECK(pd.delta_power >= 0);
            for (int g : pd.positive_part.letters())
                CHECK(g > 0);
            BraidWord d = half_twist(b.strands());
            BraidWord rebuilt = pd.positive_part;
            for (int k = 0; k < pd.delta_power; ++k)
                rebuilt = compose(invert(d), rebuilt);
            CHECK(equal(b, rebuilt));
        }
    }
}

TEST_CASE("handle reduction basics") {
    CHECK(handle_reduce(BraidWord(2, {1, -1})).empty());
    BraidWord rel = compose(BraidWord(3, {1, 2, 1}), invert(BraidWord(3, {2, 1, 2})));
    CHECK(handle_reduce(rel).empty());
    BraidWord w(3, {1, 2, -1});
    BraidWord r = handle_reduce(w);
    CHECK(!r.empty());  // degree 1, cannot be trivial
    CHECK(degree(r) == degree(w));
    CHECK(equal(w, r));
}

TEST_CASE("normal form invariant under relator insertion") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 400; ++trial) {
        BraidWord b = random_word(rng, 6, 0, 16);
        BraidWord c = insert_random_relator(rng, b);
        CHECK(normal_form(b) == normal_form(c));
    }
}

TEST_CASE("word problem cross-oracle: garside vs handle reduction") {
    std::mt19937_64 rng(20260101);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        BraidWord a = random_word(rng, 6, 0, 12);
        BraidWord b;
        if (trial % 3 == 0) {
            b = equivalent_scramble(rng, a);
        } else {
            b = random_word(rng, a.strands(), 0, 12).widened(a.strands());
        }
        bool garside_eq = equal(a, b);
        bool handle_eq = handle_trivial(compose(a, invert(b)));
        CHECK(garside_eq == handle_eq);
        ++checked;
    }
    CHECK(checked == 1000);
}

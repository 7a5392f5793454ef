#include "doctest.h"

#include <random>

#include "braidmoves/braid_word.hpp"
#include "braidmoves/closure.hpp"
#include "braidmoves/conjugacy.hpp"
#include "braidmoves/garside.hpp"
#include "support/random_words.hpp"

using namespace braidmoves;
using testsupport::random_word;

namespace {

BraidWord conjugate_by(const BraidWord& b, const std::vector<int>& c) {
    std::vector<int> w(c.rbegin(), c.rend());
    for (int& g : w)
        g = -g;
    w.insert(w.end(), b.letters().begin(), b.letters().end());
    w.insert(w.end(), c.begin(), c.end());
    return BraidWord(b.strands(), std::move(w));
}

}  // namespace

TEST_CASE("summit trace conjugates correctly") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 150; ++trial) {
        BraidWord b = random_word(rng, 5, 0, 12);
        SummitResult s = summit(b);
        CHECK(equal(conjugate_by(b, s.trace), expand(s.element)));
    }
}

TEST_CASE("sweep entries are conjugates with valid traces") {
    std::mt19937_64 rng(5150);
    ConjugacyEngine engine;
    for (int trial = 0; trial < 25; ++trial) {
        BraidWord b = random_word(rng, 4, 0, 8);
        ConjugacySweep sw = engine.sweep(b);
        CHECK(sw.complete);
        for (const auto& e : sw.entries)
            CHECK(equal(conjugate_by(b, e.trace), expand(e.nf)));
    }
}

TEST_CASE("conjugate inputs share the key") {
    SUBCASE("single generator conjugation") {
        BraidWord b(4, {1, -2, 3});
        BraidWord c = conjugate_by(b, {2});
        ConjugacyEngine engine;
        CHECK(engine.conj_key(b).nf == engine.conj_key(c).nf);
    }
    SUBCASE("sigma1 and sigma2 in B3 are conjugate") {
        ConjugacyEngine engine;
        // sigma_2 = (sigma_1 sigma_2) sigma_1 (sigma_1 sigma_2)^-1
        BraidWord lhs(3, {2});
        BraidWord rhs(3, {1, 2, 1, -2, -1});
        CHECK(equal(lhs, rhs));
        CHECK(engine.conj_key(BraidWord(3, {1})).nf == engine.conj_key(BraidWord(3, {2})).nf);
    }
    SUBCASE("degree separates classes") {
        ConjugacyEngine engine;
        CHECK(engine.conj_key(BraidWord(3, {1, 2})).nf != engine.conj_key(BraidWord(3, {-1, 2})).nf);
    }
}

TEST_CASE("conj_key invariant under random conjugators in the complete regime") {
    std::mt19937_64 rng(777);
    ConjugacyEngine engine;
    int complete_pairs = 0;
    for (int trial = 0; trial < 120; ++trial) {
        BraidWord b = random_word(rng, 5, 0, 10);
        std::uniform_int_distribution<int> len(0, 6);
        BraidWord g = random_word(rng, b.strands(), len(rng));
        BraidWord c = conjugate_by(b, g.letters());
        ConjKey kb = engine.conj_key(b);
        ConjKey kc = engine.conj_key(c);
        if (kb.complete && kc.complete) {
            CHECK(kb.nf == kc.nf);
            ++complete_pairs;
        }
    }
    CHECK(complete_pairs > 90);  // regime should cover most of this corpus
}

TEST_CASE("class invariants: degree and closure type are key invariants") {
    std::mt19937_64 rng(2024);
    ConjugacyEngine engine;
    for (int trial = 0; trial < 60; ++trial) {
        BraidWord b = random_word(rng, 5, 0, 10);
        ConjKey k = engine.conj_key(b);
        BraidWord rep = expand(k.nf);
        CHECK(degree(rep) == degree(b));
        CHECK(component_count(rep) == component_count(b));
    }
}

TEST_CASE("central elements sweep to a singleton") {
    ConjugacyEngine engine;
    BraidWord d2 = compose(half_twist(3), half_twist(3));
    ConjugacySweep sw = engine.sweep(d2);
    CHECK(sw.complete);
    CHECK(sw.entries.size() == 1);
}

TEST_CASE("beyond the regime the sweep is flagged incomplete") {
    ConjugacyEngine engine(5000, 6);
    BraidWord b(7, {1, -2, 3, 4, 5, 6});
    ConjKey k = engine.conj_key(b);
    CHECK(!k.complete);
}

TEST_CASE("node cap reports budget exhaustion") {
    ConjugacyEngine tiny(2);
    BraidWord b(4, {1, -2, 3, 1, -2});
    ConjKey k = tiny.conj_key(b);
    CHECK(!k.complete);
}

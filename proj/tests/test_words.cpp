#include <catch2/catch_amalgamated.hpp>

#include "baire/baire.hpp"
#include "oracles.hpp"

using namespace baire;

TEST_CASE("alphabet basics") {
    Alphabet bin = Alphabet::binary();
    CHECK(bin.is_finite());
    CHECK(bin.size() == 2);
    CHECK(bin.contains(1));
    CHECK_FALSE(bin.contains(2));
    CHECK(bin == Alphabet::finite(2));

    Alphabet nat = Alphabet::naturals();
    CHECK_FALSE(nat.is_finite());
    CHECK(nat.contains(123456789));
    CHECK_FALSE(nat == bin);

    CHECK_THROWS_AS(Alphabet::finite(0), std::invalid_argument);
}

TEST_CASE("finite word validation and prefix order") {
    Alphabet bin = Alphabet::binary();
    FiniteWord u(bin, {0, 1});
    CHECK(u.size() == 2);
    CHECK(u[1] == 1);
    CHECK_THROWS_AS(FiniteWord(bin, {0, 2}), std::invalid_argument);

    CHECK(FiniteWord(bin, {}).is_prefix_of(u));
    CHECK(FiniteWord(bin, {0}).is_prefix_of(u));
    CHECK_FALSE(FiniteWord(bin, {1}).is_prefix_of(u));
    CHECK_FALSE(FiniteWord(bin, {0, 1, 0}).is_prefix_of(u));

    FiniteWord padded = u.padded_to(5, 0);
    CHECK(padded.symbols() == std::vector<Symbol>{0, 1, 0, 0, 0});
    CHECK(u.padded_to(1, 0).symbols() == u.symbols());  // never truncates
}

TEST_CASE("ultimately periodic words canonicalize on construction") {
    Alphabet bin = Alphabet::binary();

    // Period reduced to its primitive root.
    UpWord w1(bin, {}, {0, 1, 0, 1});
    CHECK(w1.prefix().is_empty());
    CHECK(w1.period().symbols() == std::vector<Symbol>{0, 1});

    // Prefix symbols equal to the period's last symbol are absorbed.
    UpWord w2(bin, {0, 1, 1}, {1});
    CHECK(w2.prefix().symbols() == std::vector<Symbol>{0});
    CHECK(w2.period().symbols() == std::vector<Symbol>{1});

    // Absorption rotates the period: 0 (10)^w = (01)^w.
    UpWord w3(bin, {0}, {1, 0});
    CHECK(w3.prefix().is_empty());
    CHECK(w3.period().symbols() == std::vector<Symbol>{0, 1});

    // Equal words get equal representations.
    CHECK(w3 == UpWord(bin, {}, {0, 1}));
    CHECK(UpWord(bin, {0, 1}, {0, 1}) == UpWord(bin, {}, {0, 1}));

    CHECK_THROWS_AS(UpWord(bin, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(UpWord(bin, {2}, {0}), std::invalid_argument);
}

TEST_CASE("indexing and shifting") {
    Alphabet bin = Alphabet::binary();
    UpWord w(bin, {0, 0, 1}, {1, 0});  // 0 0 1 1 0 1 0 1 0 ...
    CHECK(w.at(0) == 0);
    CHECK(w.at(2) == 1);
    CHECK(w.at(3) == 1);
    CHECK(w.at(4) == 0);
    CHECK(w.at(103) == 1);  // odd positions beyond the prefix carry 1

    CHECK(w.shifted(0) == w);
    CHECK(w.shifted(3) == UpWord(bin, {}, {1, 0}));
    CHECK(UpWord(bin, {}, {0, 1}).shifted(1) == UpWord(bin, {}, {1, 0}));

    oracles::Rng rng(20260816);
    for (int trial = 0; trial < 200; ++trial) {
        UpWord g = oracles::random_binary_word(rng, 4, 4);
        std::uint64_t i = rng.below(12);
        UpWord s = g.shifted(i);
        for (std::uint64_t n = 0; n < 24; ++n) CHECK(s.at(n) == g.at(i + n));
    }
}

TEST_CASE("extends_at") {
    Alphabet bin = Alphabet::binary();
    UpWord w(bin, {}, {0, 1});
    CHECK(w.extends_at(0, FiniteWord(bin, {0, 1})));
    CHECK(w.extends_at(1, FiniteWord(bin, {1, 0, 1})));
    CHECK_FALSE(w.extends_at(0, FiniteWord(bin, {1})));
    CHECK(w.extends_at(7, FiniteWord(bin, {})));  // empty word, vacuous

    oracles::Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        UpWord g = oracles::random_binary_word(rng, 3, 3);
        std::uint64_t i = rng.below(10);
        std::uint64_t len = rng.below(5);
        std::vector<Symbol> seg;
        for (std::uint64_t n = 0; n < len; ++n) seg.push_back(g.at(i + n));
        CHECK(g.extends_at(i, FiniteWord(bin, seg)));
        if (len > 0) {
            seg[len - 1] ^= 1;
            CHECK_FALSE(g.extends_at(i, FiniteWord(bin, seg)));
        }
    }
}

TEST_CASE("concat prepends one symbol") {
    Alphabet bin = Alphabet::binary();
    UpWord w(bin, {}, {1});
    UpWord c = UpWord::concat(FiniteWord(bin, {0}), w);
    CHECK(c.at(0) == 0);
    CHECK(c.at(1) == 1);
    CHECK(c == UpWord(bin, {0}, {1}));

    // Prepending then shifting is the identity.
    oracles::Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        UpWord g = oracles::random_binary_word(rng, 3, 3);
        Symbol x = rng.below(2);
        CHECK(UpWord::concat(FiniteWord(bin, {x}), g).shifted(1) == g);
    }
}

TEST_CASE("constant words") {
    UpWord z = UpWord::constant(Alphabet::binary(), 0);
    CHECK(z.prefix().is_empty());
    CHECK(z.period().symbols() == std::vector<Symbol>{0});
    CHECK(z.at(41) == 0);
}

TEST_CASE("challenge schedule validation") {
    Alphabet bin = Alphabet::binary();
    auto word = [&](std::vector<Symbol> s) { return FiniteWord(bin, std::move(s)); };

    std::map<std::uint64_t, FiniteWord> entries;
    entries.emplace(0, word({1}));
    ChallengeSchedule periodic(bin, entries, PeriodicTail{0, 1});
    CHECK(periodic.in_domain(0));
    CHECK(periodic.in_domain(1000));
    CHECK(periodic.at(1000) == word({1}));
    CHECK_FALSE(periodic.is_finite());
    CHECK(periodic.max_word_size() == 1);

    // Zero-length tail period rejected.
    CHECK_THROWS_AS(ChallengeSchedule(bin, entries, PeriodicTail{0, 0}),
                    std::invalid_argument);
    // Tail requires a full explicitly listed period.
    CHECK_THROWS_AS(ChallengeSchedule(bin, entries, PeriodicTail{0, 2}),
                    std::invalid_argument);
    // Entries beyond the tail must agree with it.
    std::map<std::uint64_t, FiniteWord> clash = entries;
    clash.emplace(3, word({0}));
    CHECK_THROWS_AS(ChallengeSchedule(bin, clash, PeriodicTail{0, 1}),
                    std::invalid_argument);

    std::map<std::uint64_t, FiniteWord> finite_entries;
    finite_entries.emplace(2, word({0, 1}));
    finite_entries.emplace(6, word({1}));
    ChallengeSchedule finite = ChallengeSchedule::finite(bin, finite_entries);
    CHECK(finite.is_finite());
    CHECK(finite.in_domain(2));
    CHECK_FALSE(finite.in_domain(3));
    CHECK(finite.next_index(0) == 2);
    CHECK(finite.next_index(3) == 6);
    CHECK_FALSE(finite.next_index(7).has_value());
    CHECK(finite.max_word_size() == 2);
}

TEST_CASE("hit sets enumerate extension indices") {
    Alphabet bin = Alphabet::binary();
    std::map<std::uint64_t, FiniteWord> entries;
    entries.emplace(0, FiniteWord(bin, {1}));
    ChallengeSchedule ones(bin, entries, PeriodicTail{0, 1});

    // (01)^w meets the constant challenge [1] exactly at odd indices.
    UpWord alt(bin, {}, {0, 1});
    HitSet hits = hit_set(alt, ones, 9);
    CHECK(hits.indices == std::vector<std::uint64_t>{1, 3, 5, 7, 9});
    REQUIRE(hits.symbolic_tail.has_value());
    CHECK(hits.symbolic_tail->start == 1);
    CHECK(hits.symbolic_tail->stride == 2);
    CHECK(hits.contains(12345));
    CHECK_FALSE(hits.contains(12346));

    // Finite schedules never yield a symbolic tail.
    std::map<std::uint64_t, FiniteWord> pair;
    pair.emplace(0, FiniteWord(bin, {0, 1}));
    pair.emplace(3, FiniteWord(bin, {1, 1}));
    ChallengeSchedule finite = ChallengeSchedule::finite(bin, pair);
    UpWord mixed(bin, {0, 1, 0, 1, 1}, {0});
    HitSet fh = hit_set(mixed, finite, 10);
    CHECK(fh.indices == std::vector<std::uint64_t>{0, 3});
    CHECK_FALSE(fh.symbolic_tail.has_value());

    // The all-zeros word never meets the challenge.
    HitSet none = hit_set(UpWord::constant(bin, 0), ones, 20);
    CHECK(none.indices.empty());
    CHECK_FALSE(none.symbolic_tail.has_value());
}

TEST_CASE("hit set certificates are sound on random words") {
    Alphabet bin = Alphabet::binary();
    std::map<std::uint64_t, FiniteWord> entries;
    entries.emplace(0, FiniteWord(bin, {0}));
    entries.emplace(1, FiniteWord(bin, {1, 1}));
    ChallengeSchedule f(bin, entries, PeriodicTail{0, 2});

    oracles::Rng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        UpWord w = oracles::random_binary_word(rng, 4, 4);
        HitSet hits = hit_set(w, f, 32);
        // Enumerated indices are exactly the true hits up to the horizon.
        for (std::uint64_t i = 0; i <= 32; ++i) {
            bool expected = f.in_domain(i) && w.extends_at(i, f.at(i));
            bool listed = std::find(hits.indices.begin(), hits.indices.end(), i) !=
                          hits.indices.end();
            CHECK(listed == expected);
        }
        // A symbolic tail promises hits at every certified index.
        if (hits.symbolic_tail) {
            const auto& tail = *hits.symbolic_tail;
            for (int k = 0; k < 8; ++k) {
                std::uint64_t i = tail.start + k * tail.stride;
                CHECK(f.in_domain(i));
                CHECK(w.extends_at(i, f.at(i)));
                CHECK(hits.contains(i));
            }
        }
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "baire/baire.hpp"
#include "oracles.hpp"

using namespace baire;

namespace {

const Alphabet kBin = Alphabet::binary();

ExactRational rat(const std::string& s) { return ExactRational::parse(s); }

OpenSet1D half_set() { return OpenSet1D({{rat("0"), rat("1/2")}}, rat("1/2")); }

}  // namespace

TEST_CASE("exact rationals") {
    CHECK(rat("4/6") == rat("2/3"));
    CHECK(rat("4/6").str() == "2/3");
    CHECK(rat("5").str() == "5/1");
    CHECK(rat("0").is_zero());
    CHECK(ExactRational::pow2(3) == rat("8"));
    CHECK(ExactRational::pow2(-4) == rat("1/16"));
    CHECK(ExactRational::pow2(-100) * ExactRational::pow2(100) == rat("1"));

    CHECK(rat("1/3") + rat("1/6") == rat("1/2"));
    CHECK(rat("1/3") - rat("1/2") == rat("-1/6"));
    CHECK(rat("2/3") * rat("3/4") == rat("1/2"));
    CHECK(rat("2/3") / rat("4/3") == rat("1/2"));
    CHECK(rat("1/3") < rat("1/2"));
    CHECK(rat("-1") < rat("0"));

    CHECK_THROWS_AS(rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(rat(""), std::invalid_argument);
    CHECK_THROWS_AS(rat("1") / rat("0"), std::invalid_argument);
}

TEST_CASE("open set validation") {
    CHECK(half_set().zero_adherent());
    CHECK_FALSE(OpenSet1D({{rat("1/5"), rat("1/4")}}, rat("1/4")).zero_adherent());

    OpenSet1D split({{rat("0"), rat("1/8")}, {rat("1/5"), rat("1/4")}}, rat("1/4"));
    CHECK(split.contains(rat("1/16")));
    CHECK(split.contains(rat("21/100")));
    CHECK_FALSE(split.contains(rat("1/8")));  // endpoints excluded
    CHECK_FALSE(split.contains(rat("3/20")));
    CHECK(split.containing_interval(rat("21/100")) == 1);

    CHECK_THROWS_AS(OpenSet1D({}, rat("0")), std::invalid_argument);
    CHECK_THROWS_AS(OpenSet1D({{rat("1/2"), rat("1/4")}}, rat("1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(OpenSet1D({{rat("0"), rat("2")}}, rat("1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        OpenSet1D({{rat("1/5"), rat("1/4")}, {rat("0"), rat("1/8")}}, rat("1/4")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        OpenSet1D({{rat("0"), rat("1/4")}, {rat("1/8"), rat("1/2")}}, rat("1/2")),
        std::invalid_argument);
}

TEST_CASE("tail sums of fixed words") {
    UpWord zero = UpWord::constant(kBin, 0);
    CHECK(tail_sum(zero, 0).is_zero());
    CHECK(tail_sum(zero, 17).is_zero());

    // All ones: t_n = 2^(1-n).
    UpWord ones = UpWord::constant(kBin, 1);
    for (std::uint64_t n : {0ULL, 1ULL, 2ULL, 10ULL, 40ULL, 64ULL})
        CHECK(tail_sum(ones, n) ==
              ExactRational::pow2(1 - static_cast<std::int64_t>(n)));

    // (10)^w: 1 + 1/4 + 1/16 + ... = 4/3, then shifted geometric pieces.
    UpWord ten(kBin, {}, {1, 0});
    CHECK(tail_sum(ten, 0) == rat("4/3"));
    CHECK(tail_sum(ten, 1) == rat("1/3"));
    CHECK(tail_sum(ten, 2) == rat("1/3"));
    CHECK(tail_sum(ten, 3) == rat("1/12"));
    CHECK(tail_sum(ten, 4) == rat("1/12"));

    CHECK_THROWS_AS(tail_sum(UpWord::constant(Alphabet::finite(3), 0), 0),
                    std::invalid_argument);
}

TEST_CASE("tail sums satisfy the recurrence and bounds") {
    oracles::Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        UpWord g = oracles::random_binary_word(rng, 5, 5);
        for (std::uint64_t n = 0; n <= 20; ++n) {
            ExactRational tn = tail_sum(g, n);
            // t_n = g(n) 2^-n + t_{n+1}
            ExactRational step = g.at(n) == 1
                                     ? ExactRational::pow2(-static_cast<std::int64_t>(n))
                                     : ExactRational(0);
            CHECK(tn == step + tail_sum(g, n + 1));
            // 0 <= t_n <= 2^(1-n)
            CHECK(ExactRational(0) <= tn);
            CHECK(tn <= ExactRational::pow2(1 - static_cast<std::int64_t>(n)));
        }
    }
}

TEST_CASE("tail sums squeezed by plain partial sums") {
    oracles::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        UpWord g = oracles::random_binary_word(rng, 4, 4);
        std::uint64_t n = rng.below(8);
        ExactRational partial = oracles::partial_tail_sum(g, n, 64);
        ExactRational value = tail_sum(g, n);
        CHECK(partial <= value);
        CHECK(value <= partial + ExactRational::pow2(1 - static_cast<std::int64_t>(n) - 64));
    }
}

TEST_CASE("purely periodic words scale by shifting a full period") {
    oracles::Rng rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        UpWord g = oracles::random_binary_word(rng, 0, 5);
        std::uint64_t p = g.period_size();
        for (std::uint64_t n = 0; n < 6; ++n)
            CHECK(tail_sum(g, n + p) ==
                  ExactRational::pow2(-static_cast<std::int64_t>(p)) * tail_sum(g, n));
    }
}

TEST_CASE("dyadic windows bound every extension exactly") {
    // Window of [1] at index 3: t_3 of any word starting 0001... lies in
    // [1/8, 1/4], both ends attained.
    Interval w3 = dyadic_window(3, FiniteWord(kBin, {1}));
    CHECK(w3.lo == rat("1/8"));
    CHECK(w3.hi == rat("1/4"));

    Interval w0 = dyadic_window(0, FiniteWord(kBin, {0, 0, 1}));
    CHECK(w0.lo == rat("1/4"));
    CHECK(w0.hi == rat("1/2"));

    // Extremes are attained by the all-zero and all-one continuations.
    oracles::Rng rng(44);
    for (int trial = 0; trial < 80; ++trial) {
        std::uint64_t i = rng.below(6);
        std::vector<Symbol> symbols(1 + rng.below(5));
        for (Symbol& s : symbols) s = rng.below(2);
        FiniteWord w(kBin, symbols);
        Interval window = dyadic_window(i, w);

        std::vector<Symbol> head(static_cast<std::size_t>(i), 0);
        head.insert(head.end(), symbols.begin(), symbols.end());
        CHECK(tail_sum(UpWord(kBin, head, {0}), i) == window.lo);
        CHECK(tail_sum(UpWord(kBin, head, {1}), i) == window.hi);

        // Random extensions stay inside.
        for (int k = 0; k < 10; ++k) {
            UpWord tail = oracles::random_binary_word(rng, 2, 3);
            std::vector<Symbol> ext = head;
            std::vector<Symbol> pre = tail.prefix().symbols();
            ext.insert(ext.end(), pre.begin(), pre.end());
            ExactRational t = tail_sum(UpWord(kBin, ext, tail.period().symbols()), i);
            CHECK(window.lo <= t);
            CHECK(t <= window.hi);
        }
    }
}

TEST_CASE("window search finds shortest-lex fits") {
    WindowRecord r = detail::find_window(half_set(), 3, 8, false);
    CHECK(r.word.symbols() == std::vector<Symbol>{1});
    CHECK(r.window.lo == rat("1/8"));
    CHECK(r.window.hi == rat("1/4"));
    CHECK(r.interval_index == 0);

    // At scale 2^1 the unit interval needs three symbols: [0,0,1].
    OpenSet1D unit({{rat("0"), rat("1")}}, rat("1"));
    WindowRecord u3 = detail::find_window(unit, 0, 8, false);
    CHECK(u3.word.symbols() == std::vector<Symbol>{0, 0, 1});
    CHECK(u3.window.lo == rat("1/4"));
    CHECK(u3.window.hi == rat("1/2"));
    CHECK_THROWS_AS(detail::find_window(unit, 0, 2, false), NoWindow);

    // Away from 0 the windows eventually all miss.
    OpenSet1D narrow({{rat("1/5"), rat("1/4")}}, rat("1/4"));
    try {
        detail::find_window(narrow, 10, 8, false);
        FAIL("expected NoWindow");
    } catch (const NoWindow& e) {
        CHECK(e.index == 10);
        CHECK(e.near_miss.has_value());
    }
}

TEST_CASE("certified challenges steer tail sums into U") {
    ChallengeWithCertificate cc = challenge_from_open_set(half_set(), std::vector<std::uint64_t>{3, 5}, 8);
    CHECK(cc.schedule.at(3).symbols() == std::vector<Symbol>{1});
    CHECK(validate_certificate(cc.certificate, half_set()));

    // Any word extending f(i) at i has t_i inside U, tested with random
    // suffixes behind the scheduled word.
    oracles::Rng rng(45);
    for (const WindowRecord& r : cc.certificate.records) {
        for (int k = 0; k < 20; ++k) {
            std::vector<Symbol> head(static_cast<std::size_t>(r.index), 0);
            for (Symbol& s : head) s = rng.below(2);
            std::vector<Symbol> w = r.word.symbols();
            head.insert(head.end(), w.begin(), w.end());
            UpWord tail = oracles::random_binary_word(rng, 3, 3);
            std::vector<Symbol> pre = tail.prefix().symbols();
            head.insert(head.end(), pre.begin(), pre.end());
            ExactRational t =
                tail_sum(UpWord(kBin, head, tail.period().symbols()), r.index);
            CHECK(half_set().contains(t));
        }
    }

    CHECK_THROWS_AS(
        challenge_from_open_set(OpenSet1D({{rat("1/5"), rat("1/4")}}, rat("1/4")),
                                std::vector<std::uint64_t>{0, 1}, 8),
        std::invalid_argument);
}

TEST_CASE("periodic certified challenges reuse the zero interval") {
    ChallengeWithCertificate cc =
        challenge_from_open_set(half_set(), PeriodicTail{2, 4}, 8);
    REQUIRE(cc.schedule.tail().has_value());
    CHECK(cc.schedule.tail()->start == 2);
    CHECK(cc.schedule.tail()->period == 4);
    CHECK(cc.schedule.at(2).symbols() == std::vector<Symbol>{0, 1});
    CHECK(cc.schedule.at(6) == cc.schedule.at(2));
    CHECK(cc.certificate.records.size() == 4);
    CHECK(validate_certificate(cc.certificate, half_set()));
}

TEST_CASE("certificate validation rejects tampering") {
    ChallengeWithCertificate cc =
        challenge_from_open_set(half_set(), PeriodicTail{2, 4}, 8);
    CHECK(validate_certificate(cc.certificate, half_set()));

    WindowCertificate wrong_window = cc.certificate;
    wrong_window.records[0].window.hi += ExactRational::pow2(-40);
    CHECK_FALSE(validate_certificate(wrong_window, half_set()));

    WindowCertificate wrong_interval = cc.certificate;
    wrong_interval.records[0].interval.lo += ExactRational::pow2(-40);
    CHECK_FALSE(validate_certificate(wrong_interval, half_set()));

    WindowCertificate wrong_index = cc.certificate;
    wrong_index.records[0].interval_index = 5;
    CHECK_FALSE(validate_certificate(wrong_index, half_set()));
}

TEST_CASE("hits in U for fixed words") {
    HitsReport ten = hits_in_U(UpWord(kBin, {}, {1, 0}), half_set(), 4);
    CHECK(ten.hits == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(ten.infinitely_often);

    HitsReport zero = hits_in_U(UpWord::constant(kBin, 0), half_set(), 20);
    CHECK(zero.hits.empty());
    CHECK_FALSE(zero.infinitely_often);

    // 1^w against (1/5, 1/3): only t_3 = 1/4 lands inside, and the set
    // does not adhere to 0, so the hits stop.
    OpenSet1D band({{rat("1/5"), rat("1/3")}}, rat("1/3"));
    HitsReport ones = hits_in_U(UpWord::constant(kBin, 1), band, 10);
    CHECK(ones.hits == std::vector<std::uint64_t>{3});
    CHECK_FALSE(ones.infinitely_often);
}

TEST_CASE("corollary demonstration end to end") {
    CorollaryTranscript t = corollary_demo(half_set(), PeriodicTail{2, 4}, 8);
    CHECK(t.word == UpWord(kBin, {}, {0, 0, 0, 1}));
    CHECK(validate_certificate(t.certificate, half_set()));
    CHECK(t.report.infinitely_often);
    CHECK(t.horizon == t.word.prefix_size() + 2 * t.word.period_size());
    for (std::uint64_t n = 0; n <= t.horizon; ++n)
        CHECK(half_set().contains(tail_sum(t.word, n)) ==
              (std::find(t.report.hits.begin(), t.report.hits.end(), n) !=
               t.report.hits.end()));

    CorollaryTranscript tiny =
        corollary_demo(OpenSet1D({{rat("0"), rat("1/32")}}, rat("1/32")),
                       PeriodicTail{8, 1}, 8);
    CHECK(tiny.report.infinitely_often);

    CHECK_THROWS_AS(
        corollary_demo(OpenSet1D({{rat("1/5"), rat("1/4")}}, rat("1/4")),
                       PeriodicTail{2, 1}, 8),
        std::invalid_argument);
}

#include <doctest.h>

#include <set>
#include <tuple>

#include "setfn/error.hpp"
#include "setfn/iou_analysis.hpp"
#include "support/test_util.hpp"

using namespace setfn;
using test::mask_of;

namespace {

// Independent enumeration: plain mask loops with direct condition tests, in
// the same canonical order (Y, B, A, x).
std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, int>> naive_configs(
    int m, CounterexampleCase kind) {
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, int>> out;
    const GroundSet g(m);
    for (std::uint64_t y = 0; y < g.subset_count(); ++y)
        for (std::uint64_t b = 0; b < g.subset_count(); ++b)
            for (std::uint64_t a = 0; a < g.subset_count(); ++a) {
                if ((a & ~b) != 0 || a == b) continue;       // need A strictly inside B
                if ((a & y) != (b & y) || (a & y) == 0) continue; // A n Y = B n Y, nonempty
                for (int x = 1; x <= m; ++x) {
                    const std::uint64_t xbit = element_bit(x);
                    const bool outside = (xbit & (y | b)) == 0;
                    const bool inside = (xbit & y) != 0 && (xbit & b) == 0;
                    if (kind == CounterexampleCase::OutsideYB ? outside : inside)
                        out.emplace_back(y, b, a, x);
                }
            }
    return out;
}

long long intersect_count(const SubsetMask& a, const SubsetMask& b) {
    return (a & b).cardinality();
}
long long union_count(const SubsetMask& a, const SubsetMask& b) {
    return (a | b).cardinality();
}

} // namespace

TEST_CASE("closed form for x outside Y u B") {
    CHECK(closed_form_r_outside({1, 1, 2}) == make_rational(-1, 3));
    CHECK(closed_form_r_outside({2, 3, 5}) == make_rational(-1, 10));
    CHECK_THROWS_AS(closed_form_r_outside({1, 2, 2}), Error);
    CHECK_THROWS_AS(closed_form_r_outside({0, 1, 2}), Error);
    CHECK_THROWS_AS(closed_form_r_outside({3, 2, 5}), Error);
}

TEST_CASE("closed form for x inside Y") {
    CHECK(closed_form_r_inside(2, 3) == make_rational(1, 6));
    CHECK(closed_form_r_inside(1, 2) == make_rational(1, 2));
    CHECK_THROWS_AS(closed_form_r_inside(3, 3), Error);
    CHECK_THROWS_AS(closed_form_r_inside(0, 2), Error);
}

TEST_CASE("direct four-evaluation R") {
    const GroundSet g(3);
    CHECK(direct_r(mask_of(g, {1}), mask_of(g, {1}), mask_of(g, {1, 2}), 3) ==
          make_rational(-1, 3));
    CHECK(direct_r(mask_of(g, {1, 2}), mask_of(g, {1}), mask_of(g, {1, 3}), 2) ==
          make_rational(1, 6));

    // A = B collapses both brackets.
    CHECK(direct_r(mask_of(g, {1}), mask_of(g, {1, 2}), mask_of(g, {1, 2}), 3) == Rational(0));

    CHECK_THROWS_AS(direct_r(mask_of(g, {1}), mask_of(g, {2}), mask_of(g, {1, 3}), 2), Error);
    CHECK_THROWS_AS(direct_r(mask_of(g, {1}), mask_of(g, {2}), mask_of(g, {2, 3}), 2), Error);
    CHECK_THROWS_AS(direct_r(mask_of(g, {1}), mask_of(g, {2}), mask_of(g, {2, 3}), 3), Error);

    // x inside B is available behind the explicit opt-in only.
    CHECK(direct_r(mask_of(g, {1}), SubsetMask::empty(g), mask_of(g, {1}), 1, true) ==
          Rational(1));
}

TEST_CASE("enumeration matches the naive reference and the closed forms") {
    for (int m = 3; m <= 5; ++m) {
        for (CounterexampleCase kind : {CounterexampleCase::OutsideYB, CounterexampleCase::InsideY}) {
            const auto expected = naive_configs(m, kind);
            std::size_t index = 0;
            const auto visited = enumerate_counterexamples(m, kind, [&](const CounterexampleConfig& c) {
                REQUIRE(index < expected.size());
                const auto [y, b, a, x] = expected[index];
                CHECK(c.y.bits() == y);
                CHECK(c.b.bits() == b);
                CHECK(c.a.bits() == a);
                CHECK(c.x == x);

                // Sign and closed-form agreement, exactly.
                if (kind == CounterexampleCase::OutsideYB) {
                    CHECK(c.r < 0);
                    CHECK(c.r == closed_form_r_outside({intersect_count(c.a, c.y),
                                                        union_count(c.a, c.y),
                                                        union_count(c.b, c.y)}));
                } else {
                    CHECK(c.r > 0);
                    CHECK(c.r == closed_form_r_inside(union_count(c.a, c.y),
                                                      union_count(c.b, c.y)));
                }
                ++index;
                return true;
            });
            CHECK(index == expected.size());
            CHECK(visited == expected.size());
        }
    }
}

TEST_CASE("the canonical worked configurations appear in the stream") {
    const GroundSet g(3);
    const auto outside = collect_counterexamples(3, CounterexampleCase::OutsideYB, 1);
    REQUIRE(outside.size() == 1);
    CHECK(outside[0].y == mask_of(g, {1}));
    CHECK(outside[0].a == mask_of(g, {1}));
    CHECK(outside[0].b == mask_of(g, {1, 2}));
    CHECK(outside[0].x == 3);
    CHECK(outside[0].r == make_rational(-1, 3));

    const auto inside = collect_counterexamples(3, CounterexampleCase::InsideY, 1);
    REQUIRE(inside.size() == 1);
    CHECK(inside[0].y == mask_of(g, {1, 2}));
    CHECK(inside[0].a == mask_of(g, {1}));
    CHECK(inside[0].b == mask_of(g, {1, 3}));
    CHECK(inside[0].x == 2);
    CHECK(inside[0].r == make_rational(1, 6));
}

TEST_CASE("enumeration bounds") {
    const auto ignore = [](const CounterexampleConfig&) { return true; };
    CHECK_THROWS_AS(enumerate_counterexamples(2, CounterexampleCase::OutsideYB, ignore), Error);
    CHECK_THROWS_AS(enumerate_counterexamples(2, CounterexampleCase::InsideY, ignore), Error);
    CHECK_THROWS_AS(enumerate_counterexamples(13, CounterexampleCase::OutsideYB, ignore), Error);
}

TEST_CASE("configs convert to verified standard-mode certificates") {
    for (int m : {3, 4}) {
        for (CounterexampleCase kind : {CounterexampleCase::OutsideYB, CounterexampleCase::InsideY}) {
            std::size_t seen = 0;
            enumerate_counterexamples(m, kind, [&](const CounterexampleConfig& c) {
                auto [f, cert] = to_violation_certificate(c);
                CHECK(cert.gap < 0);
                CHECK(verify_certificate(f, cert));
                return ++seen < 400;
            });
            CHECK(seen > 0);
        }
    }
}

TEST_CASE("realizability of abstract parameter triples") {
    CHECK(realizable_outside({1, 1, 2}, 3));
    CHECK(!realizable_outside({1, 1, 2}, 2)); // b_d + 1 = 3 elements needed
    CHECK(realizable_outside({2, 3, 5}, 6));
    CHECK(!realizable_outside({2, 3, 5}, 5));
    CHECK_THROWS_AS(realizable_outside({1, 2, 2}, 8), Error);

    const CounterexampleConfig c = realize_outside({2, 3, 5}, 6);
    CHECK(intersect_count(c.a, c.y) == 2);
    CHECK(intersect_count(c.b, c.y) == 2);
    CHECK(union_count(c.a, c.y) == 3);
    CHECK(union_count(c.b, c.y) == 5);
    CHECK(c.r == make_rational(-1, 10));
    CHECK_THROWS_AS(realize_outside({2, 3, 5}, 5), Error);

    // The triples realized on {1..m} are exactly those the enumeration hits.
    for (int m = 3; m <= 6; ++m) {
        std::set<std::tuple<long long, long long, long long>> from_enum;
        enumerate_counterexamples(m, CounterexampleCase::OutsideYB,
                                  [&](const CounterexampleConfig& c) {
                                      from_enum.insert({intersect_count(c.a, c.y),
                                                        union_count(c.a, c.y),
                                                        union_count(c.b, c.y)});
                                      return true;
                                  });
        std::set<std::tuple<long long, long long, long long>> predicted;
        for (long long ab_n = 1; ab_n <= m; ++ab_n)
            for (long long a_d = ab_n; a_d <= m; ++a_d)
                for (long long b_d = a_d + 1; b_d <= m; ++b_d)
                    if (realizable_outside({ab_n, a_d, b_d}, m))
                        predicted.insert({ab_n, a_d, b_d});
        CHECK(from_enum == predicted);
    }
}

TEST_CASE("subset-count claim refutation") {
    const PropertyRefutation one = refute_property11(1);
    const GroundSet g1(1);
    CHECK(one.y == mask_of(g1, {1}));
    CHECK(one.a == mask_of(g1, {1}));
    CHECK(one.b == SubsetMask::empty(g1));
    CHECK(one.n_a == 0);
    CHECK(one.n_b == 1);

    for (int m = 1; m <= 6; ++m) {
        const PropertyRefutation w = refute_property11(m);
        CHECK(w.b.subset_of(w.a));
        CHECK(!(w.b == w.a));
        CHECK(w.n_b > w.n_a);
        // n = |Y \ S| complements |S n Y| within Y.
        CHECK(w.n_a + (w.a & w.y).cardinality() == w.y.cardinality());
        CHECK(w.n_b + (w.b & w.y).cardinality() == w.y.cardinality());
        // Same shape as the m = 1 witness.
        CHECK(w.y == SubsetMask::of_elements(GroundSet(m), {1}));
        CHECK(w.a == SubsetMask::of_elements(GroundSet(m), {1}));
        CHECK(w.b.is_empty());
    }
}

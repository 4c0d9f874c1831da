#include <doctest.h>

#include "setfn/error.hpp"
#include "setfn/set_function.hpp"
#include "support/test_util.hpp"

using namespace setfn;
using test::mask_of;

TEST_CASE("ground sets and masks enforce their bounds") {
    CHECK_THROWS_AS(GroundSet(0), Error);
    CHECK_THROWS_AS(GroundSet(64), Error);
    const GroundSet g(3);
    CHECK_THROWS_AS(SubsetMask(g, 0b1000), Error);
    CHECK_THROWS_AS(mask_of(g, {4}), Error);
    CHECK_THROWS_AS(mask_of(g, {0}), Error);
    CHECK(SubsetMask::full(g).cardinality() == 3);
    CHECK(mask_of(g, {1, 3}).to_string() == "{1,3}");
    CHECK(SubsetMask::empty(g).to_string() == "{}");
    CHECK(mask_of(g, {1, 3}).elements() == std::vector<int>{1, 3});

    const GroundSet other(4);
    CHECK_THROWS_AS(mask_of(g, {1}) | mask_of(other, {1}), Error);
}

TEST_CASE("iou evaluation matches direct counting") {
    const GroundSet g(3);
    const SetFunction f = SetFunction::iou(g, mask_of(g, {1, 2}));
    CHECK(f.evaluate(mask_of(g, {1, 2})) == Rational(1));
    CHECK(f.evaluate(SubsetMask::empty(g)) == Rational(0));

    const SetFunction single = SetFunction::iou(g, mask_of(g, {1}));
    CHECK(single.evaluate(mask_of(g, {1, 2, 3})) == make_rational(1, 3));

    const SetFunction card = SetFunction::cardinality(GroundSet(5));
    CHECK(card.evaluate(mask_of(GroundSet(5), {2, 5})) == Rational(2));
}

TEST_CASE("iou rejects an empty reference set") {
    const GroundSet g(3);
    CHECK_THROWS_AS(SetFunction::iou(g, SubsetMask::empty(g)), Error);
    CHECK_THROWS_AS(SetFunction::neg_iou(g, SubsetMask::empty(g)), Error);
}

TEST_CASE("evaluate rejects a ground-set mismatch") {
    const SetFunction f = SetFunction::cardinality(GroundSet(3));
    CHECK_THROWS_AS(f.evaluate(SubsetMask::empty(GroundSet(4))), Error);
}

TEST_CASE("iou range and extremes") {
    // 0 <= IoU <= 1, with 1 exactly at A = Y and 0 exactly when A n Y = {}.
    for (int m = 1; m <= 8; ++m) {
        const GroundSet g(m);
        for (std::uint64_t y = 1; y < g.subset_count(); ++y) {
            const SubsetMask y_mask(g, y);
            const SetFunction f = SetFunction::iou(g, y_mask);
            for (std::uint64_t a = 0; a < g.subset_count(); ++a) {
                const SubsetMask a_mask(g, a);
                const Rational v = f.evaluate(a_mask);
                CHECK(v >= 0);
                CHECK(v <= 1);
                CHECK((v == 1) == (a_mask == y_mask));
                CHECK((v == 0) == ((a & y) == 0));
            }
        }
    }
}

TEST_CASE("evaluation is pure") {
    const GroundSet g(4);
    const SetFunction f = SetFunction::iou(g, mask_of(g, {2, 3}));
    const SubsetMask a = mask_of(g, {1, 2});
    const Rational first = f.evaluate(a);
    for (int i = 0; i < 100; ++i) CHECK(f.evaluate(a) == first);
}

TEST_CASE("marginal gains") {
    const GroundSet g2(2);
    CHECK(marginal_gain(SetFunction::cardinality(g2), SubsetMask::empty(g2), 1) == Rational(1));

    const SetFunction f = SetFunction::iou(g2, mask_of(g2, {1}));
    CHECK(marginal_gain(f, mask_of(g2, {1}), 2) == make_rational(-1, 2));
    CHECK(marginal_gain(f, SubsetMask::empty(g2), 1) == Rational(1));

    CHECK_THROWS_AS(marginal_gain(f, mask_of(g2, {1}), 1), Error);
    CHECK_THROWS_AS(marginal_gain(f, mask_of(g2, {1}), 3), Error);
}

TEST_CASE("truncation, coverage, and graph cut families") {
    const GroundSet g(4);
    const SetFunction trunc = SetFunction::truncation(g, 2);
    CHECK(trunc.evaluate(mask_of(g, {1})) == Rational(1));
    CHECK(trunc.evaluate(mask_of(g, {1, 2, 3})) == Rational(2));
    CHECK_THROWS_AS(SetFunction::truncation(g, -1), Error);

    const SetFunction cover =
        SetFunction::coverage(g, {{10, 20}, {20, 30}, {30}, {}});
    CHECK(cover.evaluate(SubsetMask::empty(g)) == Rational(0));
    CHECK(cover.evaluate(mask_of(g, {1, 2})) == Rational(3));
    CHECK(cover.evaluate(mask_of(g, {2, 3})) == Rational(2));
    CHECK(cover.evaluate(mask_of(g, {4})) == Rational(0));
    CHECK_THROWS_AS(SetFunction::coverage(g, {{1}}), Error);

    const SetFunction cut = SetFunction::graph_cut(g, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    CHECK(cut.evaluate(SubsetMask::empty(g)) == Rational(0));
    CHECK(cut.evaluate(mask_of(g, {1})) == Rational(2));
    CHECK(cut.evaluate(mask_of(g, {1, 3})) == Rational(4));
    CHECK(cut.evaluate(SubsetMask::full(g)) == Rational(0));
    CHECK_THROWS_AS(SetFunction::graph_cut(g, {{1, 1}}), Error);
    CHECK_THROWS_AS(SetFunction::graph_cut(g, {{1, 5}}), Error);
}

TEST_CASE("scaled and negated wrappers") {
    const GroundSet g(3);
    const SetFunction f = SetFunction::scaled(SetFunction::cardinality(g), make_rational(-3, 2));
    CHECK(f.evaluate(mask_of(g, {1, 2})) == Rational(-3));

    // Double negation is the identity on every subset.
    for (int m = 1; m <= 10; m += 3) {
        const GroundSet gm(m);
        const SetFunction base = SetFunction::iou(gm, mask_of(gm, {1}));
        const SetFunction twice = SetFunction::negated(SetFunction::negated(base));
        for (std::uint64_t bits = 0; bits < gm.subset_count(); ++bits) {
            const SubsetMask a(gm, bits);
            CHECK(twice.evaluate(a) == base.evaluate(a));
        }
    }
}

TEST_CASE("dense tables demand exactly 2^m values") {
    const GroundSet g(2);
    CHECK_THROWS_AS(SetFunction::dense_table(g, {Rational(0)}), Error);
    const SetFunction f =
        SetFunction::dense_table(g, {Rational(0), Rational(1), Rational(1), Rational(2)});
    CHECK(f.evaluate(mask_of(g, {1, 2})) == Rational(2));
    CHECK(f.evaluate(mask_of(g, {2})) == Rational(1));
}

TEST_CASE("neg_iou is the pointwise negation of iou") {
    const GroundSet g(5);
    const SubsetMask y = mask_of(g, {2, 4});
    const SetFunction pos = SetFunction::iou(g, y);
    const SetFunction neg = SetFunction::neg_iou(g, y);
    for (std::uint64_t bits = 0; bits < g.subset_count(); ++bits) {
        const SubsetMask a(g, bits);
        CHECK(neg.evaluate(a) == -pos.evaluate(a));
    }
}

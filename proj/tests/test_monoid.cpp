#include "doctest.h"
#include "filterlab/monoid.hpp"

using namespace filterlab;

TEST_CASE("monoid addition")
{
    CHECK(MonoidElem({1, 2}) + MonoidElem({2, 0}) == MonoidElem({3, 2}));
    CHECK(MonoidElem({0, 0}) + MonoidElem({3, 1}) == MonoidElem({3, 1}));
    CHECK(MonoidElem({1}) + MonoidElem({1}) == MonoidElem({2}));
    CHECK_THROWS(MonoidElem({1}) + MonoidElem({1, 1}));
    CHECK_THROWS(MonoidElem({-1}));
}

TEST_CASE("pre-orders")
{
    GradedMonoid pw(2, OrderKind::pointwise), lex(2, OrderKind::lexicographic);
    CHECK(pw.preceq(MonoidElem({1, 0}), MonoidElem({1, 2})));
    CHECK_FALSE(pw.preceq(MonoidElem({2, 0}), MonoidElem({1, 2})));
    CHECK(lex.preceq(MonoidElem({0, 5}), MonoidElem({1, 0})));
    CHECK_FALSE(lex.preceq(MonoidElem({1, 0}), MonoidElem({0, 5})));
}

TEST_CASE("order compatible with addition on a box")
{
    auto box = box_enumerate(MonoidElem({2, 2}));
    for (auto kind : {OrderKind::pointwise, OrderKind::lexicographic}) {
        GradedMonoid M(2, kind);
        for (const auto& a : box)
            for (const auto& b : box)
                for (const auto& c : box) {
                    CHECK(M.preceq(MonoidElem::zero(2), a));
                    if (M.preceq(a, b)) CHECK(M.preceq(a + c, b + c));
                }
    }
}

TEST_CASE("box enumeration")
{
    auto b = box_enumerate(MonoidElem({1, 1}));
    REQUIRE(b.size() == 4);
    CHECK(b[1] == MonoidElem({0, 1}));
    CHECK(b[2] == MonoidElem({1, 0}));
    CHECK(box_enumerate(MonoidElem({2})).size() == 3);
    CHECK(box_enumerate(MonoidElem({0, 0})).size() == 1);
}

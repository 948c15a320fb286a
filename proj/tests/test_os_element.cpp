#include "doctest.h"

#include "gmconn/os_element.hpp"
#include "gmconn/tuples.hpp"

#include <stdexcept>

using namespace gmconn;

TEST_CASE("tuple helpers") {
    auto subs = subsets_lex(4, 2);
    REQUIRE(subs.size() == 6);
    CHECK(subs.front() == Tuple{1, 2});
    CHECK(subs.back() == Tuple{3, 4});
    CHECK(subsets_lex(3, 0) == std::vector<Tuple>{Tuple{}});

    Tuple t{3, 1, 2};
    CHECK(sort_with_sign(t) == 1);  // (3,1,2) -> (1,2,3) is an even permutation
    CHECK(t == Tuple{1, 2, 3});
    Tuple u{2, 1};
    CHECK(sort_with_sign(u) == -1);
    Tuple d{1, 1};
    CHECK(sort_with_sign(d) == 0);

    CHECK(is_subset({1, 3}, {1, 2, 3, 4}));
    CHECK_FALSE(is_subset({1, 5}, {1, 2, 3, 4}));
    CHECK(drop_position(Tuple{4, 7, 9}, 2) == Tuple{4, 9});
    CHECK(tuple_label({1, 3}) == "a[1,3]");

    TupleIndex idx(subs);
    CHECK(idx(Tuple{1, 3}) == 1);
    CHECK(idx(Tuple{1, 5}) == -1);
}

TEST_CASE("wedge is alternating and graded commutative") {
    for (int i = 1; i <= 4; ++i) {
        OSElement ai = OSElement::generator({i});
        CHECK(wedge(ai, ai).is_zero());
        for (int j = 1; j <= 4; ++j) {
            if (i == j) continue;
            OSElement aj = OSElement::generator({j});
            CHECK(wedge(ai, aj) == -(wedge(aj, ai)));
        }
    }
    // (a1^a2)^(a3^a4) = (a3^a4)^(a1^a2) for even degrees
    OSElement a12 = OSElement::generator({1, 2});
    OSElement a34 = OSElement::generator({3, 4});
    CHECK(wedge(a12, a34) == wedge(a34, a12));
    CHECK(wedge(a12, a12).is_zero());
}

TEST_CASE("boundary squares to zero and satisfies the derivation rule") {
    for (int n = 2; n <= 5; ++n) {
        for (int q = 1; q <= std::min(n, 3); ++q) {
            for (const Tuple& t : subsets_lex(n, q)) {
                OSElement x = OSElement::generator(t);
                CHECK(boundary_del(boundary_del(x)).is_zero());
            }
        }
        // del(x ^ y) = del(x) ^ y + (-1)^p x ^ del(y) for p = deg x
        for (int p = 1; p <= 2; ++p) {
            for (const Tuple& s : subsets_lex(n, p)) {
                for (const Tuple& t : subsets_lex(n, 2)) {
                    OSElement x = OSElement::generator(s);
                    OSElement y = OSElement::generator(t);
                    OSElement lhs = boundary_del(wedge(x, y));
                    OSElement signed_term = wedge(x, boundary_del(y));
                    if (p % 2 == 1) signed_term = -signed_term;
                    CHECK(lhs == wedge(boundary_del(x), y) + signed_term);
                }
            }
        }
    }
}

TEST_CASE("weight one-form squares to zero") {
    for (int n = 2; n <= 6; ++n) {
        OSElement ay = OSElement::weight_one_form(n);
        CHECK(wedge(ay, ay).is_zero());
    }
}

TEST_CASE("mixed degrees are rejected") {
    OSElement x = OSElement::generator({1});
    CHECK_THROWS_AS(x.add_term({1, 2}, PolyQ(1)), std::invalid_argument);
}

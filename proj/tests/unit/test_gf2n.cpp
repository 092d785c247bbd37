#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "zeroapn/gf2n.hpp"

using namespace zeroapn;

TEST_CASE("make_ctx modulus")
{
    CHECK(Field(2).modulus() == BitPoly::parse("x^2+x+1"));
    CHECK(Field(3).modulus() == BitPoly::parse("x^3+x+1"));
    Field f1(1);
    CHECK(f1.modulus() == BitPoly::parse("x+1"));
    CHECK(f1.size() == 2);
    CHECK(f1.mul_raw(1, 1) == 1);
    CHECK_THROWS(Field(0));
    CHECK_THROWS(Field(25));
    CHECK_THROWS(Field(4, BitPoly::parse("x^4+1")));
    CHECK_THROWS(Field(4, BitPoly::parse("x^3+x+1")));
    for (int n = 2; n <= 16; ++n) {
        BitPoly m = least_irreducible(n);
        CHECK(is_irreducible(m));
        for (uint64_t b = (uint64_t(1) << n); b < m.low_word(); ++b) CHECK_FALSE(is_irreducible(BitPoly::from_u64(b)));
    }
}

TEST_CASE("fmul")
{
    Field f(3);
    auto x = f.elem(2), x2 = f.elem(4);
    CHECK(f.mul(x, x2) == f.elem(3));
    std::mt19937 rng(7);
    for (int n : {5, 8, 13, 21}) {
        Field g(n);
        for (int i = 0; i < 300; ++i) {
            auto a = g.elem(rng() % g.size()), b = g.elem(rng() % g.size()), c = g.elem(rng() % g.size());
            CHECK(g.mul(a, g.zero()) == g.zero());
            CHECK(g.mul(a, g.one()) == a);
            CHECK(g.mul(a, b) == g.mul(b, a));
            CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
            CHECK(g.mul(a, g.add(b, c)) == g.add(g.mul(a, b), g.mul(a, c)));
        }
    }
    CHECK_THROWS(f.mul(x, Field(3).one()));
}

TEST_CASE("table and reduction multiplication agree, and match the naive oracle")
{
    for (int n = 1; n <= 12; ++n) {
        Field f(n);
        oracle::NaiveField o(n, f.modulus());
        std::mt19937 rng(n);
        for (uint32_t a = 1; a < f.size(); ++a) {
            uint32_t b = 1 + rng() % f.order();
            CHECK(f.mul_raw(a, b) == f.mul_reduce(a, b));
            if (n <= 8) CHECK(f.mul_raw(a, b) == o.mul(a, b));
        }
    }
}

TEST_CASE("fpow")
{
    std::mt19937_64 rng(8);
    for (int n : {1, 4, 7, 11, 17, 22}) {
        Field f(n);
        for (int i = 0; i < 200; ++i) {
            uint32_t a = 1 + rng() % f.order();
            uint64_t d = rng() % 100000;
            CHECK(f.pow_raw(a, f.order()) == 1);
            CHECK(f.pow_raw(a, 2 * d) == f.sqr_raw(f.pow_raw(a, d)));
            CHECK(f.pow_raw(a, uint64_t(1) << n) == a);
            CHECK(f.mul_raw(a, f.inv_raw(a)) == 1);
            uint32_t b = rng() % f.size();
            CHECK(f.sqr_raw(a ^ b) == (f.sqr_raw(a) ^ f.sqr_raw(b)));
        }
        CHECK(f.pow_raw(0, 5) == 0);
        CHECK(f.pow_raw(0, 0) == 1);
        CHECK(f.pow_raw(3 % f.size(), 0) == 1);
    }
}

TEST_CASE("in_subfield")
{
    Field f4(4);
    int count = 0;
    for (uint32_t a = 0; a < 16; ++a) count += f4.in_subfield(f4.elem(a), 2);
    CHECK(count == 4);
    Field f6(6);
    for (uint32_t a = 0; a < 64; ++a) {
        CHECK(f6.in_subfield(f6.elem(a), 6));
        bool both = f6.in_subfield(f6.elem(a), 2) && f6.in_subfield(f6.elem(a), 3);
        CHECK(both == (a < 2));
    }
    Field f9(9);
    CHECK(f9.in_subfield(f9.one(), 4));
}

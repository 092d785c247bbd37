#include <doctest.h>

#include "oracle.hpp"
#include "zeroapn/ccz.hpp"
#include "zeroapn/diff.hpp"
#include "zeroapn/gf2n.hpp"

using namespace zeroapn;

TEST_CASE("spectrum anchors")
{
    Field f7(7), f9(9), f4(4);
    CHECK(spectrum(f7, 5).uniformity == 2);
    // x^81 is APN on F_{2^7} and x^5 on F_{2^9}; x^81 on F_{2^9} is far from APN
    CHECK(spectrum(f7, 81).uniformity == 2);
    CHECK(spectrum(f9, 5).uniformity == 2);
    CHECK(spectrum(f9, 81).uniformity == 26);
    CHECK(oracle::naive_spectrum(9, 81).uniformity == 26);
    for (int n = 2; n <= 9; ++n) {
        Field f(n);
        CHECK(uniformity(f, 1) == f.size());
        CHECK_FALSE(is_apn(f, 1));
    }
    CHECK(is_apn(f4, 3));
    CHECK_FALSE(is_apn(f7, 21));
}

TEST_CASE("naive oracle spectrum")
{
    CHECK(oracle::naive_spectrum(4, 3).uniformity == 2);
    CHECK(oracle::naive_spectrum(4, 0).uniformity == 16);
    CHECK_THROWS(oracle::naive_spectrum(11, 3));
}

TEST_CASE("fast, full and naive spectra agree for n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        Field f(n);
        for (uint64_t d = 0; d < f.size(); ++d) {
            auto fast = spectrum(f, d);
            auto naive = oracle::naive_spectrum(n, d);
            CHECK(fast.uniformity == naive.uniformity);
            CHECK(fast == naive);
            if (n <= 6) {
                auto full = spectrum(f, d, SpectrumMode::full);
                CHECK(full == fast);
                for (uint32_t a = 1; a < f.size(); ++a) CHECK(full.row(a) == naive.row(a));
            }
        }
    }
}

TEST_CASE("spectrum invariants")
{
    for (int n = 2; n <= 10; ++n) {
        Field f(n);
        const uint64_t M = f.order();
        for (uint64_t d = 1; d < M; ++d) {
            auto s = spectrum(f, d);
            CHECK_NOTHROW(s.check_invariants());
            CHECK(s.uniformity >= 2);
            CHECK(spectrum(f, (2 * d) % M == 0 ? M : (2 * d) % M) == s);
            uint64_t inv = inverse_exponent(n, d);
            if (inv) CHECK(uniformity(f, inv) == s.uniformity);
        }
    }
}

TEST_CASE("modulus independence of the spectrum")
{
    for (int n = 3; n <= 8; ++n) {
        Field a(n);
        BitPoly other;
        for (uint64_t b = (uint64_t(1) << (n + 1)) - 1; b > (uint64_t(1) << n); --b)
            if (is_irreducible(BitPoly::from_u64(b)) && BitPoly::from_u64(b) != a.modulus()) {
                other = BitPoly::from_u64(b);
                break;
            }
        REQUIRE(other.degree() == n);
        Field b(n, other);
        for (uint64_t d = 0; d < a.size(); ++d) CHECK(spectrum(a, d) == spectrum(b, d));
    }
}

TEST_CASE("is_x0_apn")
{
    Field f7(7);
    CHECK(is_x0_apn(f7, 21, f7.zero()));
    CHECK_FALSE(is_x0_apn(f7, 1, f7.zero()));
    for (uint32_t x0 : {0u, 1u, 5u, 100u}) CHECK(is_x0_apn(f7, 5, f7.elem(x0)));
}

TEST_CASE("fast 0-APN path matches the definition and the naive oracle")
{
    for (int n = 1; n <= 8; ++n) {
        Field f(n);
        for (uint64_t d = 0; d < f.size(); ++d) {
            bool fast = is_zero_apn(f, d);
            if (d) CHECK(fast == (zero_apn_solution_count(f, d) == 0));
            CHECK(fast == is_x0_apn(f, d, f.zero()));
            if (n <= 6) CHECK(fast == oracle::naive_x0_apn(n, d, 0));
        }
    }
}

TEST_CASE("zero_apn_solution_count")
{
    Field f6(6);
    CHECK(zero_apn_solution_count(f6, 27) == 0);
    CHECK(zero_apn_solution_count(f6, 7) > 0);
    for (int n = 1; n <= 10; ++n) {
        Field f(n);
        CHECK(zero_apn_solution_count(f, 1) == f.size() - 2);
    }
}

TEST_CASE("APN implies 0-APN")
{
    for (int n = 1; n <= 10; ++n) {
        Field f(n);
        for (uint64_t d = 0; d < f.size(); ++d)
            if (is_apn(f, d)) CHECK(is_zero_apn(f, d));
    }
}

TEST_CASE("exponent reduction")
{
    CHECK(reduce_exponent(0, 5) == 0);
    CHECK(reduce_exponent(31, 5) == 31);
    CHECK(reduce_exponent(62, 5) == 31);
    CHECK(reduce_exponent(33, 5) == 2);
    Field f5(5);
    CHECK(spectrum(f5, 3 + 31) == spectrum(f5, 3));
}

#include <doctest.h>

#include <random>

#include "zeroapn/bitpoly.hpp"

using namespace zeroapn;

namespace {

BitPoly P(const char* s) { return BitPoly::parse(s); }

BitPoly random_poly(std::mt19937_64& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<uint64_t> w(size_t(d / 64 + 1));
    for (auto& x : w) x = rng();
    if (d % 64 != 63) w.back() &= (uint64_t(2) << (d % 64)) - 1;
    return BitPoly(w);
}

} // namespace

TEST_CASE("add")
{
    CHECK((P("x+1") + P("x+1")).is_zero());
    CHECK(P("x^2+x+1") + P("x+1") == P("x^2"));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        BitPoly a = random_poly(rng, 90);
        CHECK(a + BitPoly() == a);
    }
}

TEST_CASE("mul")
{
    CHECK(P("x+1") * P("x+1") == P("x^2+1"));
    CHECK(P("x^3+x+1") * P("x^3+x^2+1") == P("x^6+x^5+x^4+x^3+x^2+x+1"));
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        BitPoly a = random_poly(rng, 200), b = random_poly(rng, 150);
        CHECK(a * BitPoly::one() == a);
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
        CHECK((a * b).square() == a.square() * b.square());
        CHECK(a * b == b * a);
    }
}

TEST_CASE("mul agrees with schoolbook on long operands")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        std::vector<uint64_t> wa(1 + rng() % 5), wb(1 + rng() % 5);
        for (auto& w : wa) w = rng();
        for (auto& w : wb) w = rng();
        BitPoly a(wa), b(wb), s;
        for (int j = 0; j <= a.degree(); ++j)
            if (a.coeff(j)) s += b.shifted(j);
        CHECK(a * b == s);
    }
}

TEST_CASE("divmod")
{
    auto [q1, r1] = divmod(P("x^2+1"), P("x+1"));
    CHECK(q1 == P("x+1"));
    CHECK(r1.is_zero());
    auto [q2, r2] = divmod(P("x^3"), P("x+1"));
    CHECK(q2 == P("x^2+x+1"));
    CHECK(r2 == P("1"));
    BitPoly a = P("x^9+x^4+1");
    CHECK(divmod(a, BitPoly::one()).first == a);
    CHECK(divmod(a, BitPoly::one()).second.is_zero());
    CHECK_THROWS(divmod(a, BitPoly()));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        BitPoly x = random_poly(rng, 130), y = random_poly(rng, 70);
        if (y.is_zero()) continue;
        auto [q, r] = divmod(x, y);
        CHECK(q * y + r == x);
        CHECK(r.degree() < y.degree());
    }
}

TEST_CASE("gcd")
{
    CHECK(gcd(P("x^2+1"), P("x+1")) == P("x+1"));
    CHECK(gcd(P("x^3+x+1"), P("x^3+x^2+1")) == BitPoly::one());
    CHECK(gcd(P("x^7+x+1"), P("x^7+x+1")) == P("x^7+x+1"));
    CHECK_THROWS(gcd(BitPoly(), BitPoly()));
    // every common divisor of degree <= 6 divides the gcd
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        BitPoly c = random_poly(rng, 4), a = random_poly(rng, 8) * c, b = random_poly(rng, 8) * c;
        if (a.is_zero() || b.is_zero()) continue;
        BitPoly g = gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        for (uint64_t bits = 2; bits < 128; ++bits) {
            BitPoly d = BitPoly::from_u64(bits);
            if ((a % d).is_zero() && (b % d).is_zero()) CHECK((g % d).is_zero());
        }
    }
}

TEST_CASE("is_irreducible")
{
    CHECK(is_irreducible(P("x^2+x+1")));
    CHECK_FALSE(is_irreducible(P("x^2+1")));
    CHECK(is_irreducible(P("x^5+x^2+1")));
    CHECK_THROWS(is_irreducible(P("1")));
    // count of irreducibles of degree 8 is 30
    int count = 0;
    for (uint64_t b = 256; b < 512; ++b) count += is_irreducible(BitPoly::from_u64(b));
    CHECK(count == 30);
}

TEST_CASE("factor")
{
    auto f = factor(P("x^2+1"));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<BitPoly, int>(P("x+1"), 2));

    auto want = Factorization::parse("x(x+1)(x^2+x+1)^4(x^3+x+1)(x^3+x^2+1)");
    want.normalize();
    CHECK(factor(want.expand()) == want);

    auto f331 = factor(Factorization::parse("x^7(x+1)^7(x^3+x+1)^2(x^3+x^2+1)^2(x^9+x+1)(x^9+x^8+1)").expand());
    CHECK(f331.to_string() == "x^7*(x+1)^7*(x^3+x+1)^2*(x^3+x^2+1)^2*(x^9+x+1)*(x^9+x^8+1)");
    CHECK_THROWS(factor(BitPoly()));
}

TEST_CASE("factor invariants on random input")
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 60; ++i) {
        BitPoly a = random_poly(rng, 120);
        if (a.is_zero()) continue;
        auto f = factor(a);
        CHECK(f.expand() == a);
        for (size_t j = 0; j < f.factors.size(); ++j) {
            CHECK(is_irreducible(f.factors[j].first));
            CHECK(f.factors[j].second >= 1);
            if (j) CHECK(f.factors[j - 1].first < f.factors[j].first);
        }
    }
    // repeated factors
    BitPoly b = pow(P("x^4+x+1"), 6) * pow(P("x^2+x+1"), 3) * P("x");
    CHECK(factor(b).to_string() == "x*(x^2+x+1)^3*(x^4+x+1)^6");
}

TEST_CASE("text formats")
{
    CHECK(P("x^5+x^2+1").to_string() == "x^5+x^2+1");
    CHECK(P("0x25") == P("x^5+x^2+1"));
    CHECK(P("x^5+x^2+1").to_hex() == "0x25");
    CHECK(BitPoly().to_string() == "0");
    CHECK(P("x^{12}+x") == P("x^12+x"));
    CHECK(BitPoly().degree() < 0);
    CHECK_THROWS(BitPoly::parse("x^^2"));
    CHECK_THROWS(Factorization::parse("(x+1"));
}

TEST_CASE("derivative and square root")
{
    CHECK(P("x^3+x^2+x").derivative() == P("x^2+1"));
    BitPoly a = P("x^7+x^3+1");
    CHECK(a.square().sqrt() == a);
    CHECK(a.reversed(9) == P("x^9+x^6+x^2"));
}

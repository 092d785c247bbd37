#include "zeroapn/ccz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace zeroapn {

namespace {

uint64_t modulus_of(int n)
{
    if (n < 1 || n > 62) throw std::invalid_argument("n out of range: " + std::to_string(n));
    return (uint64_t(1) << n) - 1;
}

uint64_t reduce_nonzero(int n, uint64_t d)
{
    uint64_t M = modulus_of(n);
    uint64_t r = d % M;
    if (r == 0) throw std::invalid_argument("exponent " + std::to_string(d) + " is 0 mod 2^n-1");
    return r;
}

} // namespace

std::vector<uint64_t> doubling_coset(int n, uint64_t d)
{
    uint64_t M = modulus_of(n);
    uint64_t v = d % M;
    std::vector<uint64_t> c;
    for (int i = 0; i < n; ++i) {
        if (std::find(c.begin(), c.end(), v) != c.end()) break;
        c.push_back(v);
        v = (v << 1) % M;
    }
    std::sort(c.begin(), c.end());
    return c;
}

uint64_t coset_leader(int n, uint64_t d) { return doubling_coset(n, d).front(); }

uint64_t inverse_exponent(int n, uint64_t d)
{
    using i128 = __int128;
    i128 M = i128(modulus_of(n));
    i128 a = i128(d % uint64_t(M)), b = M, x0 = 1, x1 = 0;
    while (b) {
        i128 q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    if (a != 1) return 0;
    x0 %= M;
    if (x0 < 0) x0 += M;
    return uint64_t(x0);
}

ExponentClass exponent_class(int n, uint64_t d)
{
    ExponentClass c;
    c.n = n;
    uint64_t r = reduce_nonzero(n, d);
    c.members = doubling_coset(n, r);
    uint64_t inv = inverse_exponent(n, r);
    c.invertible = inv != 0 || modulus_of(n) == 1;
    if (inv) {
        auto other = doubling_coset(n, inv);
        c.members.insert(c.members.end(), other.begin(), other.end());
        std::sort(c.members.begin(), c.members.end());
        c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    }
    c.canonical = c.members.front();
    return c;
}

uint64_t canonical_rep(int n, uint64_t d) { return exponent_class(n, d).canonical; }

bool are_ccz_equiv(int n, uint64_t d1, uint64_t d2) { return canonical_rep(n, d1) == canonical_rep(n, d2); }

std::vector<ExponentClass> distinct_classes(int n, const std::vector<uint64_t>& ds)
{
    std::map<uint64_t, ExponentClass> by_rep;
    for (auto d : ds) {
        auto c = exponent_class(n, d);
        by_rep.emplace(c.canonical, std::move(c));
    }
    std::vector<ExponentClass> out;
    for (auto& [k, c] : by_rep) out.push_back(std::move(c));
    return out;
}

} // namespace zeroapn

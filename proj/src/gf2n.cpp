#include "zeroapn/gf2n.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace zeroapn {

namespace {

std::vector<uint64_t> prime_factors(uint64_t m)
{
    std::vector<uint64_t> ps;
    for (uint64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) ps.push_back(m);
    return ps;
}

} // namespace

BitPoly least_irreducible(int n)
{
    if (n < 1 || n > 63) throw std::invalid_argument("degree out of range");
    if (n == 1) return BitPoly::from_u64(3);
    for (uint64_t p = (uint64_t(1) << n) | 1; p < (uint64_t(1) << (n + 1)); p += 2) {
        BitPoly c = BitPoly::from_u64(p);
        if (is_irreducible(c)) return c;
    }
    throw std::logic_error("no irreducible polynomial found");
}

Field::Field(int n)
{
    if (n < 1 || n > max_degree) throw std::invalid_argument("field degree must be in [1, 24], got " + std::to_string(n));
    init(n, least_irreducible(n));
}

Field::Field(int n, const BitPoly& modulus)
{
    if (n < 1 || n > max_degree) throw std::invalid_argument("field degree must be in [1, 24], got " + std::to_string(n));
    if (modulus.degree() != n) throw std::invalid_argument("modulus degree does not match field degree");
    if (!is_irreducible(modulus)) throw std::invalid_argument("modulus " + modulus.to_string() + " is reducible");
    init(n, modulus);
}

void Field::init(int n, const BitPoly& modulus)
{
    n_ = n;
    modulus_ = modulus;
    mod_bits_ = modulus.low_word();
    const uint32_t M = order();
    // primitive element: order exactly 2^n - 1
    auto ps = prime_factors(M);
    for (uint32_t g = (n == 1 ? 1 : 2); g < size(); ++g) {
        bool ok = true;
        for (auto p : ps)
            if (pow_slow(g, M / p) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = g;
            break;
        }
    }
    if (n <= table_limit) {
        log_.assign(size(), 0);
        exp_.assign(2 * size_t(M), 0);
        uint32_t v = 1;
        for (uint32_t i = 0; i < M; ++i) {
            exp_[i] = exp_[i + M] = v;
            log_[v] = i;
            v = mul_reduce(v, gen_);
        }
        if (v != 1) throw std::logic_error("generator search failed");
    }
}

uint32_t Field::mul_reduce(uint32_t a, uint32_t b) const
{
    uint64_t hi;
    uint64_t p = clmul64_lo(a, b, &hi);
    for (int i = 2 * n_ - 2; i >= n_; --i)
        if (p >> i & 1) p ^= mod_bits_ << (i - n_);
    return uint32_t(p);
}

uint32_t Field::pow_slow(uint32_t a, uint64_t e) const
{
    uint32_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mul_reduce(r, b);
        e >>= 1;
        if (e) b = mul_reduce(b, b);
    }
    return r;
}

uint32_t Field::pow_raw(uint32_t a, uint64_t d) const
{
    if (a == 0) return d == 0 ? 1 : 0;
    uint64_t e = d % order();
    if (!log_.empty()) return exp_[(uint64_t(log_[a]) * e) % order()];
    return pow_slow(a, e);
}

uint32_t Field::inv_raw(uint32_t a) const
{
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!log_.empty()) return exp_[(order() - log_[a]) % order()];
    return pow_slow(a, order() - 1);
}

std::vector<uint32_t> Field::power_table(uint64_t d) const
{
    std::vector<uint32_t> t(size());
    t[0] = d == 0 ? 1 : 0;
    if (!log_.empty()) {
        uint64_t e = d % order();
        for (uint32_t x = 1; x < size(); ++x) t[x] = exp_[(uint64_t(log_[x]) * e) % order()];
    } else {
        for (uint32_t x = 1; x < size(); ++x) t[x] = pow_raw(x, d);
    }
    return t;
}

void Field::check(FieldElem a) const
{
    if (a.owner != this) throw std::invalid_argument("field element belongs to a different context");
    if (a.bits >= size()) throw std::invalid_argument("field element out of range");
}

FieldElem Field::elem(uint32_t bits) const
{
    if (bits >= size()) throw std::invalid_argument("residue " + std::to_string(bits) + " out of range for n=" + std::to_string(n_));
    return {bits, this};
}

FieldElem Field::add(FieldElem a, FieldElem b) const
{
    check(a);
    check(b);
    return {a.bits ^ b.bits, this};
}

FieldElem Field::mul(FieldElem a, FieldElem b) const
{
    check(a);
    check(b);
    return {mul_raw(a.bits, b.bits), this};
}

FieldElem Field::pow(FieldElem a, uint64_t d) const
{
    check(a);
    return {pow_raw(a.bits, d), this};
}

FieldElem Field::inv(FieldElem a) const
{
    check(a);
    return {inv_raw(a.bits), this};
}

bool Field::in_subfield(FieldElem a, int m) const
{
    check(a);
    if (m < 1) throw std::invalid_argument("subfield degree must be positive");
    uint32_t v = a.bits;
    // a^(2^n) = a, so only m mod n squarings matter
    for (int i = 0; i < m % n_; ++i) v = sqr_raw(v);
    return v == a.bits;
}

} // namespace zeroapn

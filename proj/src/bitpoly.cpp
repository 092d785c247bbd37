#include "zeroapn/bitpoly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <random>
#include <sstream>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ZEROAPN_X86 1
#endif

namespace zeroapn {

namespace {

uint64_t clmul_soft(uint64_t a, uint64_t b, uint64_t* hi)
{
    // 4-bit windowed carry-less multiply
    uint64_t tab[16];
    tab[0] = 0;
    uint64_t a_hi_bits[16];
    a_hi_bits[0] = 0;
    for (int i = 1; i < 16; ++i) {
        tab[i] = 0;
        a_hi_bits[i] = 0;
        for (int j = 0; j < 4; ++j)
            if (i >> j & 1) {
                tab[i] ^= a << j;
                if (j) a_hi_bits[i] ^= a >> (64 - j);
            }
    }
    uint64_t lo = 0, h = 0;
    for (int s = 60; s >= 0; s -= 4) {
        h = (h << 4) | (lo >> 60);
        lo <<= 4;
        unsigned nib = (b >> s) & 15;
        lo ^= tab[nib];
        h ^= a_hi_bits[nib];
    }
    *hi = h;
    return lo;
}

#ifdef ZEROAPN_X86
__attribute__((target("pclmul,sse2")))
void clmul_words_hw(const uint64_t* a, size_t na, const uint64_t* b, size_t nb, uint64_t* out)
{
    for (size_t i = 0; i < na; ++i) {
        if (!a[i]) continue;
        __m128i av = _mm_set_epi64x(0, (long long)a[i]);
        for (size_t j = 0; j < nb; ++j) {
            __m128i bv = _mm_set_epi64x(0, (long long)b[j]);
            __m128i p = _mm_clmulepi64_si128(av, bv, 0x00);
            out[i + j] ^= (uint64_t)_mm_cvtsi128_si64(p);
            out[i + j + 1] ^= (uint64_t)_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p));
        }
    }
}

__attribute__((target("pclmul,sse2")))
uint64_t clmul64_hw(uint64_t a, uint64_t b, uint64_t* hi)
{
    __m128i p = _mm_clmulepi64_si128(_mm_set_epi64x(0, (long long)a), _mm_set_epi64x(0, (long long)b), 0x00);
    *hi = (uint64_t)_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p));
    return (uint64_t)_mm_cvtsi128_si64(p);
}

bool have_pclmul()
{
    static const bool ok = __builtin_cpu_supports("pclmul");
    return ok;
}
#endif

} // namespace

uint64_t clmul64_lo(uint64_t a, uint64_t b, uint64_t* hi)
{
#ifdef ZEROAPN_X86
    if (have_pclmul()) return clmul64_hw(a, b, hi);
#endif
    return clmul_soft(a, b, hi);
}

void clmul_words(const uint64_t* a, size_t na, const uint64_t* b, size_t nb, uint64_t* out)
{
    std::fill(out, out + na + nb, 0);
#ifdef ZEROAPN_X86
    if (have_pclmul()) {
        clmul_words_hw(a, na, b, nb, out);
        return;
    }
#endif
    for (size_t i = 0; i < na; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < nb; ++j) {
            uint64_t hi;
            uint64_t lo = clmul_soft(a[i], b[j], &hi);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
}

BitPoly::BitPoly(std::vector<uint64_t> words) : w_(std::move(words)) { trim(); }

void BitPoly::trim()
{
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

BitPoly BitPoly::from_u64(uint64_t bits)
{
    BitPoly p;
    if (bits) p.w_.push_back(bits);
    return p;
}

BitPoly BitPoly::monomial(int e)
{
    if (e < 0) throw std::invalid_argument("negative exponent");
    BitPoly p;
    p.w_.assign(e / 64 + 1, 0);
    p.w_.back() = uint64_t(1) << (e % 64);
    return p;
}

int BitPoly::degree() const
{
    if (w_.empty()) return -1;
    return int(w_.size() - 1) * 64 + 63 - std::countl_zero(w_.back());
}

bool BitPoly::coeff(int i) const
{
    if (i < 0 || size_t(i / 64) >= w_.size()) return false;
    return w_[i / 64] >> (i % 64) & 1;
}

void BitPoly::set_coeff(int i, bool v)
{
    if (coeff(i) != v) flip(i);
}

void BitPoly::flip(int i)
{
    if (i < 0) throw std::invalid_argument("negative exponent");
    if (size_t(i / 64) >= w_.size()) w_.resize(i / 64 + 1, 0);
    w_[i / 64] ^= uint64_t(1) << (i % 64);
    trim();
}

int BitPoly::weight() const
{
    int c = 0;
    for (auto v : w_) c += std::popcount(v);
    return c;
}

BitPoly& BitPoly::operator+=(const BitPoly& o)
{
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
}

BitPoly operator*(const BitPoly& a, const BitPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<uint64_t> out(a.w_.size() + b.w_.size());
    clmul_words(a.w_.data(), a.w_.size(), b.w_.data(), b.w_.size(), out.data());
    return BitPoly(std::move(out));
}

BitPoly& BitPoly::operator*=(const BitPoly& o)
{
    *this = *this * o;
    return *this;
}

bool operator<(const BitPoly& a, const BitPoly& b)
{
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (size_t i = a.w_.size(); i-- > 0;)
        if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
}

BitPoly BitPoly::shifted(int k) const
{
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw std::invalid_argument("negative shift");
    std::vector<uint64_t> out(w_.size() + k / 64 + 1, 0);
    int ws = k / 64, bs = k % 64;
    for (size_t i = 0; i < w_.size(); ++i) {
        out[i + ws] ^= w_[i] << bs;
        if (bs) out[i + ws + 1] ^= w_[i] >> (64 - bs);
    }
    return BitPoly(std::move(out));
}

BitPoly BitPoly::low(int k) const
{
    if (k <= 0) return {};
    if (degree() < k) return *this;
    std::vector<uint64_t> out(w_.begin(), w_.begin() + (k + 63) / 64);
    if (k % 64) out.back() &= (uint64_t(1) << (k % 64)) - 1;
    return BitPoly(std::move(out));
}

BitPoly BitPoly::reversed(int d) const
{
    if (degree() > d) throw std::invalid_argument("reverse length below degree");
    std::vector<uint64_t> out(d / 64 + 1, 0);
    for (int i = 0; i <= degree(); ++i)
        if (coeff(i)) out[(d - i) / 64] |= uint64_t(1) << ((d - i) % 64);
    return BitPoly(std::move(out));
}

namespace {
uint64_t spread32(uint32_t v)
{
    uint64_t x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

uint32_t gather_even(uint64_t x)
{
    x &= 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
    return uint32_t(x);
}
} // namespace

BitPoly BitPoly::square() const
{
    std::vector<uint64_t> out(2 * w_.size());
    for (size_t i = 0; i < w_.size(); ++i) {
        out[2 * i] = spread32(uint32_t(w_[i]));
        out[2 * i + 1] = spread32(uint32_t(w_[i] >> 32));
    }
    return BitPoly(std::move(out));
}

BitPoly BitPoly::derivative() const
{
    // coefficient of x^(i-1) is i * a_i; only odd i survive
    std::vector<uint64_t> out(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) out[i] = (w_[i] & 0xAAAAAAAAAAAAAAAAull) >> 1;
    return BitPoly(std::move(out));
}

BitPoly BitPoly::sqrt() const
{
    std::vector<uint64_t> out((w_.size() + 1) / 2, 0);
    for (size_t i = 0; i < w_.size(); ++i) {
        uint64_t g = gather_even(w_[i]);
        out[i / 2] |= (i % 2) ? g << 32 : g;
    }
    return BitPoly(std::move(out));
}

std::string BitPoly::to_string(char var) const
{
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) continue;
        if (!s.empty()) s += '+';
        if (i == 0) s += '1';
        else if (i == 1) s += var;
        else {
            s += var;
            s += '^';
            s += std::to_string(i);
        }
    }
    return s;
}

std::string BitPoly::to_hex() const
{
    if (is_zero()) return "0x0";
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (int i = degree() / 4; i >= 0; --i) {
        unsigned nib = 0;
        for (int j = 0; j < 4; ++j) nib |= unsigned(coeff(4 * i + j)) << j;
        s += digits[nib];
    }
    return "0x" + s;
}

BitPoly BitPoly::parse(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t.empty()) throw std::invalid_argument("empty polynomial");
    if (t.size() > 2 && t[0] == '0' && (t[1] == 'x' || t[1] == 'X')) {
        BitPoly p;
        int bit = 0;
        for (size_t i = t.size(); i-- > 2;) {
            char c = char(std::tolower((unsigned char)t[i]));
            int v;
            if (c >= '0' && c <= '9') v = c - '0';
            else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
            else throw std::invalid_argument("bad hex digit in polynomial: " + std::string(text));
            for (int j = 0; j < 4; ++j)
                if (v >> j & 1) p.flip(bit + j);
            bit += 4;
        }
        return p;
    }
    BitPoly p;
    char var = 0;
    size_t i = 0;
    while (i < t.size()) {
        size_t j = t.find('+', i);
        if (j == std::string::npos) j = t.size();
        std::string term = t.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("empty term in polynomial: " + std::string(text));
        if (term == "1") p.flip(0);
        else if (term == "0") {
        } else if (std::isalpha((unsigned char)term[0])) {
            if (var && term[0] != var) throw std::invalid_argument("mixed variables in univariate polynomial");
            var = term[0];
            int e = 1;
            if (term.size() > 1) {
                if (term[1] != '^' || term.size() < 3) throw std::invalid_argument("bad term: " + term);
                std::string et = term.substr(2);
                if (et.size() > 2 && et.front() == '{' && et.back() == '}') et = et.substr(1, et.size() - 2);
                size_t pos = 0;
                try {
                    e = std::stoi(et, &pos);
                } catch (const std::exception&) {
                    pos = 0;
                }
                if (pos == 0 || pos != et.size() || e < 0) throw std::invalid_argument("bad exponent: " + term);
            }
            p.flip(e);
        } else
            throw std::invalid_argument("bad term: " + term);
        i = j + 1;
        if (j == t.size() - 1) throw std::invalid_argument("trailing '+' in polynomial");
    }
    return p;
}

std::pair<BitPoly, BitPoly> divmod(const BitPoly& a, const BitPoly& b)
{
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    int da = a.degree(), db = b.degree();
    if (da < db) return {BitPoly(), a};
    std::vector<uint64_t> r = a.words();
    std::vector<uint64_t> q((da - db) / 64 + 1, 0);
    const auto& bw = b.words();
    size_t nb = bw.size();
    // b shifted by s bits, s = 0..63, built on demand
    std::array<std::vector<uint64_t>, 64> sh;
    for (int i = da; i >= db; --i) {
        if (!(r[i / 64] >> (i % 64) & 1)) continue;
        int k = i - db;
        q[k / 64] |= uint64_t(1) << (k % 64);
        int s = k % 64, off = k / 64;
        auto& v = sh[s];
        if (v.empty()) {
            v.assign(nb + 1, 0);
            for (size_t t = 0; t < nb; ++t) {
                v[t] ^= bw[t] << s;
                if (s) v[t + 1] ^= bw[t] >> (64 - s);
            }
        }
        size_t lim = std::min(v.size(), r.size() - off);
        for (size_t t = 0; t < lim; ++t) r[t + off] ^= v[t];
    }
    return {BitPoly(std::move(q)), BitPoly(std::move(r))};
}

BitPoly operator%(const BitPoly& a, const BitPoly& b) { return divmod(a, b).second; }
BitPoly operator/(const BitPoly& a, const BitPoly& b) { return divmod(a, b).first; }

BitPoly exact_div(const BitPoly& a, const BitPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

BitPoly gcd(BitPoly a, BitPoly b)
{
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        a = a % b;
        std::swap(a, b);
    }
    return a;
}

BitPoly mulmod(const BitPoly& a, const BitPoly& b, const BitPoly& m) { return (a * b) % m; }
BitPoly sqrmod(const BitPoly& a, const BitPoly& m) { return a.square() % m; }

BitPoly powmod(const BitPoly& a, uint64_t e, const BitPoly& m)
{
    BitPoly r = BitPoly::one() % m, b = a % m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        e >>= 1;
        if (e) b = sqrmod(b, m);
    }
    return r;
}

BitPoly pow(const BitPoly& a, unsigned e)
{
    BitPoly r = BitPoly::one(), b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b = b.square();
    }
    return r;
}

uint64_t eval_at_one(const BitPoly& a) { return uint64_t(a.weight() & 1); }

namespace {
std::vector<int> prime_divisors(int n)
{
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}
} // namespace

bool is_irreducible(const BitPoly& a)
{
    int n = a.degree();
    if (n < 1) throw std::invalid_argument("irreducibility of a constant");
    if (n == 1) return true;
    if (!a.coeff(0)) return false;
    // frob[i] = x^(2^i) mod a
    BitPoly x = BitPoly::x();
    std::vector<BitPoly> frob;
    frob.reserve(n + 1);
    frob.push_back(x % a);
    for (int i = 1; i <= n; ++i) frob.push_back(sqrmod(frob.back(), a));
    if (frob[n] != x % a) return false;
    for (int q : prime_divisors(n)) {
        BitPoly g = gcd(a, frob[n / q] + x);
        if (!g.is_one()) return false;
    }
    return true;
}

namespace {

void squarefree(const BitPoly& f, int mult, std::vector<std::pair<BitPoly, int>>& out)
{
    if (f.degree() < 1) return;
    BitPoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree(f.sqrt(), mult * 2, out);
        return;
    }
    BitPoly c = gcd(f, fp);
    BitPoly w = exact_div(f, c);
    int i = 1;
    while (!w.is_one()) {
        BitPoly y = gcd(w, c);
        BitPoly z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        ++i;
        w = y;
        c = exact_div(c, y);
    }
    if (!c.is_one()) squarefree(c.sqrt(), mult * 2, out);
}

// distinct-degree: returns (product of all degree-d factors, d)
std::vector<std::pair<BitPoly, int>> distinct_degree(BitPoly f)
{
    std::vector<std::pair<BitPoly, int>> out;
    BitPoly x = BitPoly::x();
    BitPoly h = x % f;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = sqrmod(h, f);
        BitPoly g = gcd(h + x, f);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = exact_div(f, g);
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

void equal_degree(const BitPoly& f, int d, std::mt19937_64& rng, std::vector<BitPoly>& out)
{
    int n = f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    for (;;) {
        std::vector<uint64_t> w((n + 63) / 64);
        for (auto& v : w) v = rng();
        BitPoly r = BitPoly(std::move(w)).low(n);
        if (r.degree() < 1) continue;
        // absolute trace F_{2^d} -> F_2 in every component
        BitPoly t = r, s = r;
        for (int i = 1; i < d; ++i) {
            t = sqrmod(t, f);
            s += t;
        }
        BitPoly g = gcd(f, s);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(g, d, rng, out);
            equal_degree(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

} // namespace

Factorization factor(const BitPoly& a)
{
    if (a.is_zero()) throw std::invalid_argument("factor of the zero polynomial");
    Factorization res;
    std::vector<std::pair<BitPoly, int>> sqf;
    squarefree(a, 1, sqf);
    std::mt19937_64 rng(0x5eed0a9e1ull);
    for (auto& [g, m] : sqf) {
        for (auto& [h, d] : distinct_degree(g)) {
            std::vector<BitPoly> irr;
            equal_degree(h, d, rng, irr);
            for (auto& p : irr) res.factors.emplace_back(p, m);
        }
    }
    res.normalize();
    return res;
}

void Factorization::normalize()
{
    std::sort(factors.begin(), factors.end(), [](auto& l, auto& r) { return l.first < r.first; });
    std::vector<std::pair<BitPoly, int>> merged;
    for (auto& f : factors) {
        if (!merged.empty() && merged.back().first == f.first) merged.back().second += f.second;
        else merged.push_back(f);
    }
    factors = std::move(merged);
}

BitPoly Factorization::expand() const
{
    BitPoly r = BitPoly::one();
    for (auto& [p, m] : factors) r *= pow(p, unsigned(m));
    return r;
}

int Factorization::degree() const
{
    int d = 0;
    for (auto& [p, m] : factors) d += p.degree() * m;
    return d;
}

std::string Factorization::to_string() const
{
    if (factors.empty()) return "1";
    std::string s;
    for (auto& [p, m] : factors) {
        if (!s.empty()) s += '*';
        if (p.weight() == 1) s += p.to_string();
        else s += "(" + p.to_string() + ")";
        if (m != 1) s += "^" + std::to_string(m);
    }
    return s;
}

Factorization Factorization::parse(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) t += c;
    Factorization f;
    size_t i = 0;
    auto read_int = [&](size_t& k) {
        size_t st = k;
        while (k < t.size() && std::isdigit((unsigned char)t[k])) ++k;
        if (st == k) throw std::invalid_argument("expected integer in factorization: " + t);
        return std::stoi(t.substr(st, k - st));
    };
    if (t == "1") return f;
    while (i < t.size()) {
        if (t[i] == '*') {
            ++i;
            continue;
        }
        BitPoly base;
        if (t[i] == '(') {
            size_t j = t.find(')', i);
            if (j == std::string::npos) throw std::invalid_argument("unbalanced parenthesis: " + t);
            base = BitPoly::parse(t.substr(i + 1, j - i - 1));
            i = j + 1;
        } else if (std::isalpha((unsigned char)t[i])) {
            base = BitPoly::x();
            ++i;
        } else
            throw std::invalid_argument("bad factorization text: " + t);
        int m = 1;
        if (i < t.size() && t[i] == '^') {
            ++i;
            m = read_int(i);
        }
        f.factors.emplace_back(base, m);
    }
    f.normalize();
    return f;
}

} // namespace zeroapn

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zeroapn {

// Polynomial over F_2. Word i holds the coefficients of x^(64i) .. x^(64i+63).
class BitPoly {
public:
    BitPoly() = default;
    explicit BitPoly(std::vector<uint64_t> words);

    static BitPoly from_u64(uint64_t bits);
    static BitPoly monomial(int e);
    static BitPoly one() { return from_u64(1); }
    static BitPoly x() { return from_u64(2); }

    // Accepts "x^5+x^2+1" style text (any single-letter variable) or 0x-prefixed hex.
    static BitPoly parse(std::string_view text);

    int degree() const;
    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
    bool coeff(int i) const;
    void set_coeff(int i, bool v);
    void flip(int i);
    int weight() const;

    const std::vector<uint64_t>& words() const { return w_; }
    uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    std::string to_string(char var = 'x') const;
    std::string to_hex() const;

    BitPoly& operator+=(const BitPoly& o);
    BitPoly& operator*=(const BitPoly& o);
    BitPoly shifted(int k) const;   // multiply by x^k
    BitPoly low(int k) const;       // truncate mod x^k
    BitPoly reversed(int d) const;  // x^d * p(1/x), requires d >= degree
    BitPoly square() const;
    BitPoly derivative() const;
    BitPoly sqrt() const;           // only meaningful when every odd coefficient is 0

    friend BitPoly operator+(BitPoly a, const BitPoly& b) { return a += b; }
    friend BitPoly operator*(const BitPoly& a, const BitPoly& b);
    friend bool operator==(const BitPoly& a, const BitPoly& b) { return a.w_ == b.w_; }
    friend bool operator!=(const BitPoly& a, const BitPoly& b) { return !(a == b); }

    // Sort order used by factorizations: degree, then the bit pattern as an integer.
    friend bool operator<(const BitPoly& a, const BitPoly& b);

private:
    void trim();
    std::vector<uint64_t> w_;
};

std::pair<BitPoly, BitPoly> divmod(const BitPoly& a, const BitPoly& b);
BitPoly operator%(const BitPoly& a, const BitPoly& b);
BitPoly operator/(const BitPoly& a, const BitPoly& b);
// Throws when b does not divide a.
BitPoly exact_div(const BitPoly& a, const BitPoly& b);

BitPoly gcd(BitPoly a, BitPoly b);
BitPoly mulmod(const BitPoly& a, const BitPoly& b, const BitPoly& m);
BitPoly sqrmod(const BitPoly& a, const BitPoly& m);
BitPoly powmod(const BitPoly& a, uint64_t e, const BitPoly& m);
BitPoly pow(const BitPoly& a, unsigned e);
uint64_t eval_at_one(const BitPoly& a);

bool is_irreducible(const BitPoly& a);

struct Factorization {
    std::vector<std::pair<BitPoly, int>> factors;

    BitPoly expand() const;
    int degree() const;
    std::string to_string() const;
    // "x^3*(x+1)^2*(x^2+x+1)" style; whitespace and '·' free text only.
    static Factorization parse(std::string_view text);
    void normalize();  // merge duplicates, sort

    friend bool operator==(const Factorization& a, const Factorization& b) { return a.factors == b.factors; }
};

// Deterministic: the random splitting uses a fixed seed and the output is sorted.
Factorization factor(const BitPoly& a);

// Fast multiply of raw word arrays; exposed for the field code.
void clmul_words(const uint64_t* a, size_t na, const uint64_t* b, size_t nb, uint64_t* out);
uint64_t clmul64_lo(uint64_t a, uint64_t b, uint64_t* hi);

} // namespace zeroapn

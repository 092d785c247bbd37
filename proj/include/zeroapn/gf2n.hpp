#pragma once

#include <cstdint>
#include <vector>

#include "zeroapn/bitpoly.hpp"

namespace zeroapn {

class Field;

struct FieldElem {
    uint32_t bits = 0;
    const Field* owner = nullptr;
    friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.bits == b.bits && a.owner == b.owner; }
};

// F_{2^n} = F_2[x]/(modulus). Hot loops use the *_raw members on plain residues.
class Field {
public:
    static constexpr int max_degree = 24;
    static constexpr int table_limit = 20;

    // Modulus: least irreducible of degree n read as an integer (x+1 for n = 1).
    explicit Field(int n);
    Field(int n, const BitPoly& modulus);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    int n() const { return n_; }
    uint32_t size() const { return uint32_t(1) << n_; }
    uint32_t order() const { return size() - 1; }  // 2^n - 1
    const BitPoly& modulus() const { return modulus_; }
    bool has_tables() const { return !log_.empty(); }
    uint32_t generator() const { return gen_; }

    FieldElem elem(uint32_t bits) const;
    FieldElem zero() const { return {0, this}; }
    FieldElem one() const { return {1, this}; }
    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem pow(FieldElem a, uint64_t d) const;
    FieldElem inv(FieldElem a) const;
    bool in_subfield(FieldElem a, int m) const;

    uint32_t mul_raw(uint32_t a, uint32_t b) const
    {
        if (!a || !b) return 0;
        if (!log_.empty()) return exp_[log_[a] + log_[b]];
        return mul_reduce(a, b);
    }
    uint32_t sqr_raw(uint32_t a) const { return mul_raw(a, a); }
    uint32_t pow_raw(uint32_t a, uint64_t d) const;
    uint32_t inv_raw(uint32_t a) const;
    uint32_t mul_reduce(uint32_t a, uint32_t b) const;

    // Requires tables. log of 0 is undefined.
    uint32_t log_raw(uint32_t a) const { return log_[a]; }
    uint32_t exp_raw(uint64_t e) const { return exp_[e % order()]; }

    // x -> x^d for every residue, using the exponent convention of pow.
    std::vector<uint32_t> power_table(uint64_t d) const;

private:
    void init(int n, const BitPoly& modulus);
    void check(FieldElem a) const;
    uint32_t pow_slow(uint32_t a, uint64_t e) const;

    int n_ = 0;
    BitPoly modulus_;
    uint64_t mod_bits_ = 0;
    uint32_t gen_ = 0;
    std::vector<uint32_t> log_, exp_;
};

BitPoly least_irreducible(int n);

} // namespace zeroapn

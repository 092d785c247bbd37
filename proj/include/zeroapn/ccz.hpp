#pragma once

#include <cstdint>
#include <vector>

namespace zeroapn {

// Residues modulo 2^n - 1.
std::vector<uint64_t> doubling_coset(int n, uint64_t d);
uint64_t coset_leader(int n, uint64_t d);
// Modular inverse of d mod 2^n - 1, or 0 when gcd(d, 2^n - 1) > 1.
uint64_t inverse_exponent(int n, uint64_t d);

uint64_t canonical_rep(int n, uint64_t d);
bool are_ccz_equiv(int n, uint64_t d1, uint64_t d2);

struct ExponentClass {
    int n = 0;
    std::vector<uint64_t> members;  // sorted
    uint64_t canonical = 0;
    bool invertible = false;
};

ExponentClass exponent_class(int n, uint64_t d);
std::vector<ExponentClass> distinct_classes(int n, const std::vector<uint64_t>& ds);

} // namespace zeroapn

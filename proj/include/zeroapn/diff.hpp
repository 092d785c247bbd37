#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zeroapn/gf2n.hpp"

namespace zeroapn {

// Exponent as used for analysis: 0 stays 0, otherwise reduced into [1, 2^n - 1].
uint64_t reduce_exponent(uint64_t d, int n);

enum class SpectrumMode { fast_row, full };

// Differential spectrum of x^d. rows[i] is the histogram {count -> #b} for a = i + 1;
// in fast_row mode a single row is stored and stands for every a.
struct DiffSpectrum {
    int n = 0;
    uint64_t d = 0;
    bool replicated = false;
    std::vector<std::map<uint32_t, uint64_t>> rows;
    uint32_t uniformity = 0;

    const std::map<uint32_t, uint64_t>& row(uint32_t a) const;
    // aggregated over every (a, b) with a != 0
    std::map<uint32_t, uint64_t> histogram() const;
    // row sums equal 2^n and every count is even; throws std::logic_error otherwise
    void check_invariants() const;

    friend bool operator==(const DiffSpectrum& l, const DiffSpectrum& r)
    {
        return l.n == r.n && l.histogram() == r.histogram();
    }
};

DiffSpectrum spectrum(const Field& f, uint64_t d, SpectrumMode mode = SpectrumMode::fast_row);
uint32_t uniformity(const Field& f, uint64_t d);
bool is_apn(const Field& f, uint64_t d);

// Definition-level check over all pairs (x, y).
bool is_x0_apn(const Field& f, uint64_t d, FieldElem x0);

// #{x not in {0,1} : (x+1)^d + x^d + 1 = 0}; for d >= 1, 0-APN iff this is zero
uint64_t zero_apn_solution_count(const Field& f, uint64_t d);
bool is_zero_apn(const Field& f, uint64_t d);

} // namespace zeroapn

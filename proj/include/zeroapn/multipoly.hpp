#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeroapn/bitpoly.hpp"

namespace zeroapn {

constexpr int kMaxVars = 4;
using Mono = std::array<int, kMaxVars>;  // exponents of x, y, z, u

// Variable index for 'x', 'y', 'z', 'u'; throws on anything else.
int var_index(char name);
char var_name(int index);

// Polynomial over F_2 in x, y, z, u: the set of monomials with coefficient 1.
class MultiPoly {
public:
    MultiPoly() = default;
    // Monomials occurring an even number of times cancel.
    static MultiPoly from_terms(std::vector<Mono> terms);
    static MultiPoly one();
    static MultiPoly var(int v);
    static MultiPoly from_univariate(const BitPoly& p, int v);
    // Sums of products; juxtaposition multiplies, e.g. "x^2y^4 + (xy+1)^2(x+y)", "x^{12}y^{16}".
    static MultiPoly parse(std::string_view text);

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::vector<Mono>& terms() const { return t_; }  // strictly decreasing
    int degree(int v) const;  // -1 for the zero polynomial
    bool uses(int v) const { return degree(v) > 0; }
    unsigned var_mask() const;
    BitPoly to_univariate(int v) const;  // throws if another variable occurs
    std::string to_string() const;

    // p(x^{2^j}, y^{2^j}, ...) = p^{2^j}
    MultiPoly frobenius(int j) const;
    MultiPoly pow(unsigned e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    std::vector<Mono> t_;
};

// Throws std::domain_error when b does not divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
// Strips every factor b from a; returns how many were removed.
int divide_out(MultiPoly& a, const MultiPoly& b);

// j >= 0 with b = a^{2^j}, or -j with a = b^{2^j}; nullopt when neither holds.
std::optional<int> frobenius_offset(const MultiPoly& a, const MultiPoly& b);

enum class ResultantPath { fraction_free, interpolation };

// Res(F, G, v) via Kronecker packing of the remaining variables into one.
MultiPoly resultant(const MultiPoly& F, const MultiPoly& G, int v, ResultantPath path = ResultantPath::fraction_free);

} // namespace zeroapn

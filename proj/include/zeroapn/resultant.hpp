#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zeroapn/bitpoly.hpp"

namespace zeroapn {

// Polynomial in F_2[x][y]: coeffs[j] is the coefficient of y^j.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<BitPoly> coeffs);

    // Terms "x^i*y^j" joined by '+', e.g. "x*y^2+x^3+x^2*y^2+x+y^2+x^2".
    static BiPoly parse(std::string_view text);

    int y_degree() const { return int(c_.size()) - 1; }
    int x_degree() const;
    bool is_zero() const { return c_.empty(); }
    const std::vector<BitPoly>& coeffs() const { return c_; }
    const BitPoly& coeff(int j) const;
    std::string to_string() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

private:
    std::vector<BitPoly> c_;
};

// Sylvester determinant over F_2. Formal degrees default to the actual degrees;
// a formal degree above the actual one pads with leading zeros.
int res_scalar(const BitPoly& f, const BitPoly& g, int deg_f = -1, int deg_g = -1);

// Res(F, G, y) by fraction-free elimination over F_2[x].
BitPoly res_eliminate(const BiPoly& F, const BiPoly& G);
// Same determinant by evaluation at points of F_{2^m} and interpolation.
BitPoly res_eliminate_interp(const BiPoly& F, const BiPoly& G);
// Sum over Sylvester rows of the largest x-degree in the row.
int res_degree_bound(const BiPoly& F, const BiPoly& G);

// Compares res_scalar(f, g) against the product of g over the roots of f in F_{2^ext_degree}.
bool res_product_formula_check(const BitPoly& f, const BitPoly& g, int ext_degree);

// Sylvester matrix (rows of F shifts, then rows of G shifts), leading coefficients first.
std::vector<std::vector<BitPoly>> sylvester_matrix(const BiPoly& F, const BiPoly& G);

// Determinant of a square matrix over F_2[x] by Bareiss elimination.
BitPoly det_fraction_free(std::vector<std::vector<BitPoly>> m);

} // namespace zeroapn

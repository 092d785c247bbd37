#include "zeroapn/resultant.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "zeroapn/gf2n.hpp"
#include "zeroapn/parallel.hpp"

namespace zeroapn {

BiPoly::BiPoly(std::vector<BitPoly> coeffs) : c_(std::move(coeffs))
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::x_degree() const
{
    int d = -1;
    for (auto& c : c_) d = std::max(d, c.degree());
    return d;
}

const BitPoly& BiPoly::coeff(int j) const
{
    static const BitPoly zero;
    if (j < 0 || j >= int(c_.size())) return zero;
    return c_[j];
}

BiPoly BiPoly::parse(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t.empty()) throw std::invalid_argument("empty bivariate polynomial");
    std::map<int, BitPoly> acc;
    size_t i = 0;
    while (i <= t.size()) {
        size_t j = t.find('+', i);
        if (j == std::string::npos) j = t.size();
        std::string term = t.substr(i, j - i);
        if (term.empty()) throw std::invalid_argument("empty term in " + t);
        int ex = 0, ey = 0;
        bool zero = false;
        size_t k = 0;
        while (k < term.size()) {
            char v = term[k];
            if (v == '*') {
                ++k;
                continue;
            }
            if (v == '1' && (k + 1 == term.size() || term[k + 1] == '*')) {
                ++k;
                continue;
            }
            if (v == '0' && term.size() == 1) {
                zero = true;
                ++k;
                continue;
            }
            if (v != 'x' && v != 'y') throw std::invalid_argument("bad term '" + term + "' in " + t);
            ++k;
            int e = 1;
            if (k < term.size() && term[k] == '^') {
                ++k;
                size_t st = k;
                while (k < term.size() && std::isdigit((unsigned char)term[k])) ++k;
                if (st == k) throw std::invalid_argument("bad exponent in '" + term + "'");
                e = std::stoi(term.substr(st, k - st));
            }
            (v == 'x' ? ex : ey) += e;
        }
        if (!zero) acc[ey].flip(ex);
        i = j + 1;
        if (j == t.size()) break;
    }
    std::vector<BitPoly> c;
    for (auto& [ey, p] : acc) {
        if (int(c.size()) <= ey) c.resize(ey + 1);
        c[ey] = p;
    }
    return BiPoly(std::move(c));
}

std::string BiPoly::to_string() const
{
    if (is_zero()) return "0";
    // descending x-degree, then descending y-degree
    std::string s;
    for (int ex = x_degree(); ex >= 0; --ex)
        for (int ey = y_degree(); ey >= 0; --ey) {
            if (!c_[ey].coeff(ex)) continue;
            if (!s.empty()) s += '+';
            std::string term;
            if (ex) term += ex == 1 ? "x" : "x^" + std::to_string(ex);
            if (ey) {
                if (!term.empty()) term += '*';
                term += ey == 1 ? "y" : "y^" + std::to_string(ey);
            }
            s += term.empty() ? "1" : term;
        }
    return s;
}

int res_scalar(const BitPoly& f, const BitPoly& g, int deg_f, int deg_g)
{
    int n = deg_f < 0 ? f.degree() : deg_f;
    int m = deg_g < 0 ? g.degree() : deg_g;
    if (n < f.degree() || m < g.degree()) throw std::invalid_argument("formal degree below actual degree");
    if (n < 0) n = 0;
    if (m < 0) m = 0;
    if (n < 1 && m < 1) throw std::invalid_argument("resultant of two constants");
    const int N = n + m;
    std::vector<BitPoly> rows;
    for (int i = 0; i < m; ++i) rows.push_back(f.reversed(n).shifted(i));
    for (int i = 0; i < n; ++i) rows.push_back(g.reversed(m).shifted(i));
    // elimination over F_2; det is 1 iff the rows are independent
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (rows[r].coeff(col)) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        std::swap(rows[col], rows[piv]);
        for (int r = col + 1; r < N; ++r)
            if (rows[r].coeff(col)) rows[r] += rows[col];
    }
    return 1;
}

std::vector<std::vector<BitPoly>> sylvester_matrix(const BiPoly& F, const BiPoly& G)
{
    int p = F.y_degree(), q = G.y_degree();
    if (p < 1 || q < 1) throw std::invalid_argument("resultant needs positive degree in the eliminated variable");
    int N = p + q;
    std::vector<std::vector<BitPoly>> m(N, std::vector<BitPoly>(N));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j <= p; ++j) m[i][i + (p - j)] = F.coeff(j);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j <= q; ++j) m[q + i][i + (q - j)] = G.coeff(j);
    return m;
}

int res_degree_bound(const BiPoly& F, const BiPoly& G)
{
    return G.y_degree() * std::max(0, F.x_degree()) + F.y_degree() * std::max(0, G.x_degree());
}

namespace {

// Division by a fixed polynomial known to divide the dividend exactly:
// quotient = reverse(reverse(a) * reverse(d)^-1 mod x^L).
class ExactDivider {
public:
    explicit ExactDivider(const BitPoly& d) : d_(d), e_(d.degree())
    {
        if (d.is_zero()) throw std::domain_error("division by zero in elimination");
        rev_ = d.reversed(e_);
        inv_ = BitPoly::one();
    }

    BitPoly divide(const BitPoly& a)
    {
        if (a.is_zero()) return {};
        if (e_ == 0) return a;
        int D = a.degree();
        if (D < e_) throw std::domain_error("inexact division in fraction-free elimination");
        int L = D - e_ + 1;
        extend(L);
        BitPoly qr = (a.reversed(D).low(L) * inv_.low(L)).low(L);
        BitPoly q = qr.reversed(L - 1);
        // the low e coefficients of q*d must reproduce a
        if ((q.low(e_) * d_.low(e_)).low(e_) != a.low(e_))
            throw std::domain_error("inexact division in fraction-free elimination");
        return q;
    }

private:
    void extend(int L)
    {
        while (prec_ < L) {
            int p2 = 2 * prec_;
            inv_ = (rev_.low(p2) * inv_.square()).low(p2);
            prec_ = p2;
        }
    }

    BitPoly d_;
    int e_;
    BitPoly rev_, inv_;
    int prec_ = 1;
};

} // namespace

BitPoly det_fraction_free(std::vector<std::vector<BitPoly>> m)
{
    const size_t N = m.size();
    if (N == 0) return BitPoly::one();
    for (auto& r : m)
        if (r.size() != N) throw std::invalid_argument("matrix is not square");
    BitPoly prev = BitPoly::one();
    for (size_t k = 0; k < N; ++k) {
        if (m[k][k].is_zero()) {
            size_t r = k + 1;
            while (r < N && m[r][k].is_zero()) ++r;
            if (r == N) return {};
            std::swap(m[k], m[r]);  // sign is irrelevant in characteristic 2
        }
        if (k + 1 == N) break;
        ExactDivider div(prev);
        const BitPoly& piv = m[k][k];
        parallel_for(N - k - 1, [&](size_t t) {
            size_t i = k + 1 + t;
            const BitPoly& lead = m[i][k];
            for (size_t j = k + 1; j < N; ++j) {
                BitPoly num = piv * m[i][j];
                if (!lead.is_zero() && !m[k][j].is_zero()) num += lead * m[k][j];
                m[i][j] = div.divide(num);
            }
            m[i][k] = BitPoly();
        });
        prev = m[k][k];
    }
    return m[N - 1][N - 1];
}

BitPoly res_eliminate(const BiPoly& F, const BiPoly& G) { return det_fraction_free(sylvester_matrix(F, G)); }

namespace {

uint32_t eval_poly(const Field& K, const BitPoly& p, uint32_t a)
{
    uint32_t acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = K.mul_raw(acc, a) ^ uint32_t(p.coeff(i));
    return acc;
}

uint32_t det_field(const Field& K, std::vector<std::vector<uint32_t>> m)
{
    const size_t N = m.size();
    uint32_t det = 1;
    for (size_t c = 0; c < N; ++c) {
        size_t p = c;
        while (p < N && m[p][c] == 0) ++p;
        if (p == N) return 0;
        std::swap(m[p], m[c]);
        det = K.mul_raw(det, m[c][c]);
        uint32_t inv = K.inv_raw(m[c][c]);
        for (size_t r = c + 1; r < N; ++r) {
            if (!m[r][c]) continue;
            uint32_t f = K.mul_raw(m[r][c], inv);
            for (size_t j = c; j < N; ++j) m[r][j] ^= K.mul_raw(f, m[c][j]);
        }
    }
    return det;
}

} // namespace

BitPoly res_eliminate_interp(const BiPoly& F, const BiPoly& G)
{
    auto S = sylvester_matrix(F, G);
    const size_t N = S.size();
    const int B = res_degree_bound(F, G);
    const uint32_t npts = uint32_t(B) + 1;
    int m = 1;
    while ((uint32_t(1) << m) < npts) ++m;
    m = std::max(m, 2);
    if (m > Field::max_degree) throw std::invalid_argument("degree bound too large for interpolation");
    Field K(m);
    std::vector<uint32_t> vals(npts);
    parallel_for(npts, [&](size_t i) {
        uint32_t a = uint32_t(i);
        std::vector<std::vector<uint32_t>> num(N, std::vector<uint32_t>(N));
        for (size_t r = 0; r < N; ++r)
            for (size_t c = 0; c < N; ++c)
                if (!S[r][c].is_zero()) num[r][c] = eval_poly(K, S[r][c], a);
        vals[i] = det_field(K, std::move(num));
    });
    // Newton divided differences on the points 0, 1, ..., B
    std::vector<uint32_t> dd = vals;
    for (uint32_t j = 1; j < npts; ++j)
        for (uint32_t i = npts - 1; i >= j; --i) {
            uint32_t den = i ^ (i - j);
            dd[i] = K.mul_raw(dd[i] ^ dd[i - 1], K.inv_raw(den));
            if (i == j) break;
        }
    // expand the Newton form into monomial coefficients
    std::vector<uint32_t> coef(npts, 0);
    for (uint32_t i = npts; i-- > 0;) {
        // coef = coef * (X - point_i) + dd[i]
        uint32_t pt = i;
        for (uint32_t t = npts - 1; t > 0; --t) coef[t] = coef[t - 1] ^ K.mul_raw(coef[t], pt);
        coef[0] = K.mul_raw(coef[0], pt) ^ dd[i];
    }
    BitPoly r;
    for (uint32_t t = 0; t < npts; ++t) {
        if (coef[t] > 1) throw std::logic_error("interpolated resultant has a coefficient outside F_2");
        if (coef[t]) r.flip(int(t));
    }
    return r;
}

bool res_product_formula_check(const BitPoly& f, const BitPoly& g, int ext_degree)
{
    if (f.is_zero()) throw std::invalid_argument("f must be nonzero");
    Factorization ff = factor(f);
    for (auto& [p, e] : ff.factors)
        if (ext_degree % p.degree() != 0)
            throw std::invalid_argument("f does not split in F_2^" + std::to_string(ext_degree));
    Field K(ext_degree);
    uint32_t prod = 1;
    int roots = 0;
    for (uint32_t a = 0; a < K.size(); ++a) {
        for (auto& [p, e] : ff.factors) {
            if (eval_poly(K, p, a) != 0) continue;
            uint32_t ga = eval_poly(K, g, a);
            for (int t = 0; t < e; ++t) prod = K.mul_raw(prod, ga);
            roots += e;
        }
    }
    if (roots != f.degree()) throw std::logic_error("root count does not match the degree of f");
    if (prod > 1) throw std::logic_error("product over roots is not in F_2");
    int res = f.degree() < 1 && g.degree() < 1 ? 1 : res_scalar(f, g);
    return int(prod) == res;
}

} // namespace zeroapn

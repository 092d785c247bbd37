#include "zeroapn/diff.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zeroapn {

uint64_t reduce_exponent(uint64_t d, int n)
{
    if (d == 0) return 0;
    uint64_t M = (uint64_t(1) << n) - 1;
    return (d - 1) % M + 1;
}

const std::map<uint32_t, uint64_t>& DiffSpectrum::row(uint32_t a) const
{
    if (a == 0 || a >= (uint32_t(1) << n)) throw std::out_of_range("row index must be a nonzero field element");
    return replicated ? rows.at(0) : rows.at(a - 1);
}

std::map<uint32_t, uint64_t> DiffSpectrum::histogram() const
{
    std::map<uint32_t, uint64_t> h;
    uint64_t M = (uint64_t(1) << n) - 1;
    for (auto& r : rows)
        for (auto [c, m] : r) h[c] += replicated ? m * M : m;
    return h;
}

void DiffSpectrum::check_invariants() const
{
    for (auto& r : rows) {
        uint64_t sum = 0;
        for (auto [c, m] : r) {
            if (c % 2) throw std::logic_error("odd differential count " + std::to_string(c));
            sum += uint64_t(c) * m;
        }
        if (sum != (uint64_t(1) << n)) throw std::logic_error("differential row does not sum to 2^n");
    }
    if (uniformity < 2) throw std::logic_error("uniformity below 2");
}

namespace {
std::map<uint32_t, uint64_t> row_histogram(const std::vector<uint32_t>& counts)
{
    std::map<uint32_t, uint64_t> h;
    for (auto c : counts) ++h[c];
    return h;
}
} // namespace

DiffSpectrum spectrum(const Field& f, uint64_t d, SpectrumMode mode)
{
    DiffSpectrum s;
    s.n = f.n();
    s.d = d;
    const uint32_t N = f.size();
    auto pw = f.power_table(reduce_exponent(d, f.n()));
    std::vector<uint32_t> counts(N);
    auto fill_row = [&](uint32_t a) {
        std::fill(counts.begin(), counts.end(), 0);
        for (uint32_t x = 0; x < N; ++x) ++counts[pw[x ^ a] ^ pw[x]];
        s.uniformity = std::max(s.uniformity, *std::max_element(counts.begin(), counts.end()));
        s.rows.push_back(row_histogram(counts));
    };
    if (mode == SpectrumMode::fast_row) {
        // D_a f(x) = a^d D_1 f(x/a): every row is a relabelling of the a = 1 row
        s.replicated = true;
        fill_row(1);
    } else {
        for (uint32_t a = 1; a < N; ++a) fill_row(a);
    }
    return s;
}

uint32_t uniformity(const Field& f, uint64_t d)
{
    const uint32_t N = f.size();
    auto pw = f.power_table(reduce_exponent(d, f.n()));
    std::vector<uint32_t> counts(N, 0);
    for (uint32_t x = 0; x < N; ++x) ++counts[pw[x ^ 1] ^ pw[x]];
    return *std::max_element(counts.begin(), counts.end());
}

bool is_apn(const Field& f, uint64_t d) { return uniformity(f, d) == 2; }

bool is_x0_apn(const Field& f, uint64_t d, FieldElem x0)
{
    if (x0.owner != &f || x0.bits >= f.size()) throw std::invalid_argument("x0 is not an element of this field");
    const uint32_t N = f.size();
    auto pw = f.power_table(reduce_exponent(d, f.n()));
    const uint32_t a = x0.bits, fa = pw[a];
    for (uint32_t x = 0; x < N; ++x) {
        if (x == a) continue;
        for (uint32_t y = 0; y < N; ++y) {
            if (y == a || y == x) continue;
            if ((fa ^ pw[x] ^ pw[y] ^ pw[a ^ x ^ y]) == 0) return false;
        }
    }
    return true;
}

uint64_t zero_apn_solution_count(const Field& f, uint64_t d)
{
    const uint32_t N = f.size();
    const uint64_t e = reduce_exponent(d, f.n());
    uint64_t cnt = 0;
    for (uint32_t x = 2; x < N; ++x)
        if ((f.pow_raw(x ^ 1, e) ^ f.pow_raw(x, e)) == 1) ++cnt;
    return cnt;
}

bool is_zero_apn(const Field& f, uint64_t d)
{
    const uint32_t N = f.size();
    const uint64_t e = reduce_exponent(d, f.n());
    // x^0 is constant, so every pair (x, y) satisfies the defining equation
    if (e == 0) return f.n() == 1;
    if (f.has_tables()) {
        const uint64_t M = f.order(), er = e % M;
        for (uint32_t x = 2; x < N; ++x) {
            uint32_t p = f.exp_raw(uint64_t(f.log_raw(x ^ 1)) * er % M);
            uint32_t q = f.exp_raw(uint64_t(f.log_raw(x)) * er % M);
            if ((p ^ q) == 1) return false;
        }
        return true;
    }
    for (uint32_t x = 2; x < N; ++x)
        if ((f.pow_raw(x ^ 1, e) ^ f.pow_raw(x, e)) == 1) return false;
    return true;
}

} // namespace zeroapn

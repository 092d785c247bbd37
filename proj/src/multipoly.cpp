#include "zeroapn/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "zeroapn/resultant.hpp"

namespace zeroapn {

int var_index(char name)
{
    switch (name) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    case 'u': return 3;
    }
    throw std::invalid_argument(std::string("unknown variable '") + name + "'");
}

char var_name(int index)
{
    static const char names[] = "xyzu";
    if (index < 0 || index >= kMaxVars) throw std::invalid_argument("variable index out of range");
    return names[index];
}

MultiPoly MultiPoly::from_terms(std::vector<Mono> terms)
{
    std::sort(terms.begin(), terms.end(), std::greater<>());
    MultiPoly p;
    for (size_t i = 0; i < terms.size();) {
        size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) p.t_.push_back(terms[i]);
        i = j;
    }
    return p;
}

MultiPoly MultiPoly::one() { return from_terms({Mono{0, 0, 0, 0}}); }

MultiPoly MultiPoly::var(int v)
{
    Mono m{0, 0, 0, 0};
    m.at(v) = 1;
    return from_terms({m});
}

MultiPoly MultiPoly::from_univariate(const BitPoly& p, int v)
{
    std::vector<Mono> t;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i)) {
            Mono m{0, 0, 0, 0};
            m.at(v) = i;
            t.push_back(m);
        }
    return from_terms(std::move(t));
}

int MultiPoly::degree(int v) const
{
    if (t_.empty()) return -1;
    int d = 0;
    for (auto& m : t_) d = std::max(d, m.at(v));
    return d;
}

unsigned MultiPoly::var_mask() const
{
    unsigned mask = 0;
    for (auto& m : t_)
        for (int v = 0; v < kMaxVars; ++v)
            if (m[v]) mask |= 1u << v;
    return mask;
}

BitPoly MultiPoly::to_univariate(int v) const
{
    if (var_mask() & ~(1u << v)) throw std::invalid_argument("polynomial is not univariate in " + std::string(1, var_name(v)));
    BitPoly p;
    for (auto& m : t_) p.flip(m[v]);
    return p;
}

std::string MultiPoly::to_string() const
{
    if (t_.empty()) return "0";
    std::string s;
    for (auto& m : t_) {
        if (!s.empty()) s += '+';
        std::string term;
        for (int v = 0; v < kMaxVars; ++v) {
            if (!m[v]) continue;
            if (!term.empty()) term += '*';
            term += var_name(v);
            if (m[v] > 1) term += "^" + std::to_string(m[v]);
        }
        s += term.empty() ? "1" : term;
    }
    return s;
}

MultiPoly MultiPoly::frobenius(int j) const
{
    if (j < 0 || j > 24) throw std::invalid_argument("frobenius power out of range");
    MultiPoly p = *this;
    for (auto& m : p.t_)
        for (auto& e : m) e <<= j;
    return p;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly r = one(), b = *this;
    int sq = 0;
    // b^{2^sq} is a relabelling, so only the odd steps multiply
    while (e) {
        if (e & 1) r = r * b.frobenius(sq);
        e >>= 1;
        ++sq;
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    std::vector<Mono> out;
    out.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i] > o.t_[j])) out.push_back(t_[i++]);
        else if (i == t_.size() || o.t_[j] > t_[i]) out.push_back(o.t_[j++]);
        else {
            ++i;
            ++j;
        }
    }
    t_ = std::move(out);
    return *this;
}

namespace {

// Kronecker substitution: variable v maps to t^{stride[v]}, valid while exponents stay below radix[v].
struct Packing {
    std::array<int64_t, kMaxVars> radix{1, 1, 1, 1};
    std::array<int64_t, kMaxVars> stride{};

    explicit Packing(const std::array<int64_t, kMaxVars>& r) : radix(r)
    {
        int64_t s = 1;
        for (int v = 0; v < kMaxVars; ++v) {
            stride[v] = s;
            s *= radix[v];
            if (s > (int64_t(1) << 34)) throw std::length_error("Kronecker packing too large");
        }
    }

    int64_t pos(const Mono& m) const
    {
        int64_t p = 0;
        for (int v = 0; v < kMaxVars; ++v) {
            if (m[v] >= radix[v]) throw std::logic_error("exponent exceeds Kronecker radix");
            p += m[v] * stride[v];
        }
        return p;
    }

    BitPoly pack(const std::vector<Mono>& terms) const
    {
        int64_t top = 0;
        for (auto& m : terms) top = std::max(top, pos(m));
        std::vector<uint64_t> w(terms.empty() ? 0 : size_t(top / 64 + 1));
        for (auto& m : terms) {
            int64_t p = pos(m);
            w[p / 64] ^= uint64_t(1) << (p % 64);
        }
        return BitPoly(std::move(w));
    }

    std::vector<Mono> unpack(const BitPoly& p) const
    {
        std::vector<Mono> out;
        auto& w = p.words();
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t bits = w[i];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int64_t q = int64_t(i) * 64 + b;
                Mono m{0, 0, 0, 0};
                for (int v = 0; v < kMaxVars; ++v) {
                    m[v] = int(q % radix[v]);
                    q /= radix[v];
                }
                out.push_back(m);
            }
        }
        return out;
    }
};

std::optional<MultiPoly> try_div(const MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return MultiPoly();
    std::array<int64_t, kMaxVars> r{};
    for (int v = 0; v < kMaxVars; ++v) {
        if (b.degree(v) > a.degree(v)) return std::nullopt;
        r[v] = a.degree(v) + 1;
    }
    Packing pk(r);
    auto [q, rem] = divmod(pk.pack(a.terms()), pk.pack(b.terms()));
    if (!rem.is_zero()) return std::nullopt;
    MultiPoly quot = MultiPoly::from_terms(pk.unpack(q));
    // packing is not injective on quotients whose degrees would overflow, so confirm
    if (quot * b != a) return std::nullopt;
    return quot;
}

} // namespace

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::array<int64_t, kMaxVars> r{};
    for (int v = 0; v < kMaxVars; ++v) r[v] = a.degree(v) + b.degree(v) + 1;
    Packing pk(r);
    return MultiPoly::from_terms(pk.unpack(pk.pack(a.terms()) * pk.pack(b.terms())));
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b)
{
    auto q = try_div(a, b);
    if (!q) throw std::domain_error("(" + b.to_string() + ") does not divide the polynomial");
    return *q;
}

int divide_out(MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero() || a.is_zero()) throw std::domain_error("divide_out needs nonzero polynomials");
    bool constant = true;
    for (auto& m : b.terms())
        for (int e : m)
            if (e) constant = false;
    if (constant) throw std::domain_error("divide_out by a constant");
    int count = 0;
    while (auto q = try_div(a, b)) {
        a = *q;
        ++count;
    }
    return count;
}

std::optional<int> frobenius_offset(const MultiPoly& a, const MultiPoly& b)
{
    if (a == b) return 0;
    if (a.is_zero() || b.is_zero() || a.term_count() != b.term_count()) return std::nullopt;
    int top = 0;
    for (int v = 0; v < kMaxVars; ++v) top = std::max({top, a.degree(v), b.degree(v)});
    for (int j = 1; j <= 24 && (1 << j) <= top; ++j) {
        if (a.frobenius(j) == b) return j;
        if (b.frobenius(j) == a) return -j;
    }
    return std::nullopt;
}

MultiPoly resultant(const MultiPoly& F, const MultiPoly& G, int v, ResultantPath path)
{
    int p = F.degree(v), q = G.degree(v);
    if (p < 1 || q < 1)
        throw std::invalid_argument(std::string("resultant needs positive degree in ") + var_name(v));
    std::array<int64_t, kMaxVars> r{1, 1, 1, 1};
    for (int w = 0; w < kMaxVars; ++w)
        if (w != v) r[w] = int64_t(q) * F.degree(w) + int64_t(p) * G.degree(w) + 1;
    Packing pk(r);
    auto to_bi = [&](const MultiPoly& P, int deg) {
        std::vector<std::vector<Mono>> rows(deg + 1);
        for (auto m : P.terms()) {
            int j = m[v];
            m[v] = 0;
            rows[j].push_back(m);
        }
        std::vector<BitPoly> c;
        for (auto& t : rows) c.push_back(pk.pack(t));
        return BiPoly(std::move(c));
    };
    BiPoly bf = to_bi(F, p), bg = to_bi(G, q);
    BitPoly res = path == ResultantPath::fraction_free ? res_eliminate(bf, bg) : res_eliminate_interp(bf, bg);
    return MultiPoly::from_terms(pk.unpack(res));
}

MultiPoly MultiPoly::parse(std::string_view text)
{
    // normalize notation: drop braces used around exponents, map product symbols to '*'
    std::string s;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, 5) == "\\cdot") {
            s += '*';
            i += 4;
        } else if (text.substr(i, 2) == "\xc2\xb7") {
            s += '*';
            ++i;
        } else if (text[i] == '{' || text[i] == '}' || std::isspace((unsigned char)text[i])) {
            continue;
        } else {
            s += text[i];
        }
    }
    size_t pos = 0;
    auto fail = [&](const std::string& msg) -> MultiPoly {
        throw std::invalid_argument("polynomial \"" + std::string(text) + "\": " + msg);
    };
    auto read_int = [&]() {
        size_t st = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (st == pos) fail("expected an integer");
        if (pos - st > 6) fail("integer too large");
        return std::stoi(s.substr(st, pos - st));
    };
    std::function<MultiPoly()> sum;
    auto atom = [&]() -> MultiPoly {
        if (pos >= s.size()) return fail("unexpected end");
        char c = s[pos];
        MultiPoly base;
        if (c == '(') {
            ++pos;
            base = sum();
            if (pos >= s.size() || s[pos] != ')') return fail("missing ')'");
            ++pos;
        } else if (std::isdigit((unsigned char)c)) {
            base = (read_int() % 2) ? one() : MultiPoly();
        } else if (c == 'x' || c == 'y' || c == 'z' || c == 'u') {
            ++pos;
            base = var(var_index(c));
        } else {
            return fail(std::string("unexpected '") + c + "'");
        }
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            base = base.pow(unsigned(read_int()));
        }
        return base;
    };
    auto product = [&]() -> MultiPoly {
        MultiPoly r = atom();
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '*') {
                ++pos;
                r = r * atom();
            } else if (c == '(' || c == 'x' || c == 'y' || c == 'z' || c == 'u' || std::isdigit((unsigned char)c)) {
                r = r * atom();
            } else {
                break;
            }
        }
        return r;
    };
    sum = [&]() -> MultiPoly {
        MultiPoly r = product();
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            ++pos;
            r += product();
        }
        return r;
    };
    if (s.empty()) return fail("empty");
    MultiPoly r = sum();
    if (pos != s.size()) return fail(std::string("unexpected '") + s[pos] + "'");
    return r;
}

} // namespace zeroapn

#include "zeroapn/systems.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "zeroapn/diff.hpp"
#include "zeroapn/exponents.hpp"
#include "zeroapn/gf2n.hpp"

namespace zeroapn {

namespace {

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

RotationRule RotationRule::parse(const std::string& text)
{
    RotationRule r;
    for (auto& tok : split_ws(text)) {
        auto arrow = tok.find("->");
        if (arrow != 1 || tok.size() < 4) throw std::invalid_argument("bad rotation entry '" + tok + "'");
        int from = var_index(tok[0]);
        Image im;
        im.target = var_index(tok[3]);
        std::string rest = tok.substr(4);
        if (!rest.empty()) {
            if (rest[0] != '^') throw std::invalid_argument("bad rotation entry '" + tok + "'");
            rest = rest.substr(1);
            auto slash = rest.find('/');
            im.num = std::stoi(rest.substr(0, slash));
            im.den = slash == std::string::npos ? 1 : std::stoi(rest.substr(slash + 1));
            if (im.num < 1 || im.den < 1 || (im.den & (im.den - 1)))
                throw std::invalid_argument("rotation exponent must be positive with a power-of-two denominator");
        }
        if (r.vars & (1u << from)) throw std::invalid_argument("variable mapped twice in rotation");
        r.vars |= 1u << from;
        r.image[from] = im;
    }
    for (int v = 0; v < kMaxVars; ++v)
        if ((r.vars >> v & 1) && !(r.vars >> r.image[v].target & 1))
            throw std::invalid_argument("rotation target outside the rule's variables");
    if (!r.vars) throw std::invalid_argument("empty rotation rule");
    return r;
}

std::string RotationRule::to_string() const
{
    std::string s;
    for (int v = 0; v < kMaxVars; ++v) {
        if (!(vars >> v & 1)) continue;
        if (!s.empty()) s += ' ';
        auto& im = image[v];
        s += std::string(1, var_name(v)) + "->" + var_name(im.target);
        if (im.num != 1 || im.den != 1) {
            s += "^" + std::to_string(im.num);
            if (im.den != 1) s += "/" + std::to_string(im.den);
        }
    }
    return s;
}

MultiPoly frobenius_rotate(const MultiPoly& p, const RotationRule& rule)
{
    if (p.var_mask() & ~rule.vars) throw std::invalid_argument("polynomial uses a variable outside the rotation rule");
    // smallest power-of-two scale making every image exponent integral
    int scale = 1;
    for (auto& m : p.terms())
        for (int v = 0; v < kMaxVars; ++v) {
            if (!m[v]) continue;
            auto& im = rule.image[v];
            while ((int64_t(m[v]) * im.num * scale) % im.den) scale *= 2;
        }
    std::vector<Mono> out;
    for (auto& m : p.terms()) {
        Mono r{0, 0, 0, 0};
        for (int v = 0; v < kMaxVars; ++v) {
            if (!m[v]) continue;
            auto& im = rule.image[v];
            r[im.target] += int(int64_t(m[v]) * im.num * scale / im.den);
        }
        out.push_back(r);
    }
    return MultiPoly::from_terms(std::move(out));
}

namespace {

// Removes every factor v and v+1 (v any variable) from a multivariate intermediate.
std::vector<RemovedFactor> strip_trivial(MultiPoly& p)
{
    std::vector<RemovedFactor> removed;
    if (p.is_zero() || std::popcount(p.var_mask()) < 2) return removed;
    for (int v = 0; v < kMaxVars; ++v) {
        if (!(p.var_mask() >> v & 1)) continue;
        for (auto f : {MultiPoly::var(v), MultiPoly::var(v) + MultiPoly::one()}) {
            int c = divide_out(p, f);
            if (c) removed.push_back({f, c});
        }
    }
    return removed;
}

void finish_report(EliminationReport& rep, const MultiPoly& last)
{
    rep.final = last.to_univariate(0);
    if (rep.final.is_zero()) throw std::domain_error("elimination produced the zero polynomial");
    rep.final_factors = factor(rep.final);
    for (auto& [f, e] : rep.final_factors.factors)
        if (f.degree() > 1) rep.candidate_subfields.insert(f.degree());
}

} // namespace

EliminationReport eliminate(const ConjugateSystem& sys, const std::vector<int>& order)
{
    std::vector<std::pair<std::string, MultiPoly>> eqs;
    for (size_t i = 0; i < sys.equations.size(); ++i)
        eqs.emplace_back(i < sys.names.size() ? sys.names[i] : "e" + std::to_string(i + 1), sys.equations[i]);
    if (eqs.size() < 2) throw std::invalid_argument("system too small to eliminate");
    unsigned all = 0;
    for (auto& [n, e] : eqs) all |= e.var_mask();
    unsigned ordered = 0;
    for (int v : order) {
        if (v == 0) throw std::invalid_argument("x cannot be eliminated");
        ordered |= 1u << v;
    }
    if ((all & ~1u) != ordered) throw std::invalid_argument("order must list every variable except x");

    EliminationReport rep;
    rep.order = order;
    int counter = 0;
    for (int v : order) {
        size_t piv = eqs.size();
        for (size_t i = 0; i < eqs.size(); ++i)
            if (eqs[i].second.uses(v)) {
                piv = i;
                break;
            }
        if (piv == eqs.size()) throw std::invalid_argument(std::string("no equation contains ") + var_name(v));
        std::vector<std::pair<std::string, MultiPoly>> next;
        int partners = 0;
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (i == piv) continue;
            if (!eqs[i].second.uses(v)) {
                next.push_back(eqs[i]);
                continue;
            }
            ++partners;
            Intermediate im;
            im.name = "R" + std::to_string(++counter);
            im.eliminated = v;
            im.from = eqs[piv].first + ", " + eqs[i].first;
            im.value = resultant(eqs[piv].second, eqs[i].second, v);
            if (im.value.is_zero())
                throw std::domain_error("zero resultant of " + im.from + " with respect to " + var_name(v));
            im.removed = strip_trivial(im.value);
            next.emplace_back(im.name, im.value);
            rep.intermediates.push_back(std::move(im));
        }
        if (partners == 0) throw std::invalid_argument(std::string("only one equation contains ") + var_name(v));
        eqs = std::move(next);
    }
    if (eqs.size() != 1) throw std::invalid_argument("elimination left " + std::to_string(eqs.size()) + " equations");
    finish_report(rep, eqs.front().second);
    return rep;
}

bool candidate_subfield_check(int n, uint64_t d, const std::set<int>& degrees)
{
    if (degrees.empty()) return true;
    Field F(n);
    const uint64_t e = reduce_exponent(d, n);
    for (int s : degrees) {
        int g = std::gcd(s, n);
        if (g == 1) continue;
        for (uint32_t a = 2; a < F.size(); ++a) {
            if (!F.in_subfield(F.elem(a), g)) continue;
            if ((F.pow_raw(a ^ 1, e) ^ F.pow_raw(a, e)) == 1) return false;
        }
    }
    return true;
}

SystemScript SystemScript::parse(const std::string& text, const std::string& source)
{
    SystemScript s;
    s.source = source;
    // join indented continuation lines, drop comments
    std::vector<std::pair<int, std::string>> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        if (trim(raw).empty()) continue;
        if (std::isspace((unsigned char)raw[0]) && !lines.empty()) lines.back().second += " " + trim(raw);
        else lines.emplace_back(lineno, trim(raw));
    }
    auto fail = [&](int ln, const std::string& msg) {
        throw std::invalid_argument(source + ":" + std::to_string(ln) + ": " + msg);
    };
    bool have_n = false, have_exp = false;
    s.admissible = Expr::parse("1");
    for (auto& [ln, line] : lines) {
        auto sp = line.find(' ');
        std::string kw = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp + 1));
        try {
            if (kw == "id") s.id = rest;
            else if (kw == "title") s.title = rest;
            else if (kw == "vars") {
                for (auto& v : split_ws(rest)) {
                    if (v.size() != 1) fail(ln, "bad variable " + v);
                    s.vars |= 1u << var_index(v[0]);
                }
            } else if (kw == "rotate") s.rule = RotationRule::parse(rest);
            else if (kw == "n") {
                s.n_of_k = Expr::parse(rest);
                have_n = true;
            } else if (kw == "exponent") {
                s.exponent = Expr::parse(rest);
                have_exp = true;
            } else if (kw == "admissible") s.admissible = Expr::parse(rest);
            else if (kw == "power") {
                auto w = split_ws(rest);
                if (w.size() < 2 || w[0].size() != 1) fail(ln, "expected: power <var> <expr>");
                s.conjugate_power[var_index(w[0][0])] = Expr::parse(trim(rest.substr(1)));
            } else {
                Step st;
                st.op = kw;
                st.line = ln;
                auto eq = rest.find('=');
                if (kw == "final") {
                    st.name = rest;
                } else if (kw == "identity" || kw == "misfactored") {
                    if (eq == std::string::npos) fail(ln, "identity needs '='");
                    st.args.push_back(trim(rest.substr(0, eq)));
                    st.poly = trim(rest.substr(eq + 1));
                } else {
                    if (eq == std::string::npos) fail(ln, kw + " needs '='");
                    st.name = trim(rest.substr(0, eq));
                    std::string rhs = trim(rest.substr(eq + 1));
                    if (kw == "seed" || kw == "printed" || kw == "misprint" || kw == "expect" || kw == "factors") {
                        st.poly = rhs;
                    } else if (kw == "conj") {
                        st.args = split_ws(rhs);
                        if (st.args.size() != 2 || st.args[0] != "rot") fail(ln, "expected: conj <name> = rot <src>");
                    } else if (kw == "res") {
                        st.args = split_ws(rhs);
                        if (st.args.size() != 3 || st.args[2].size() != 1) fail(ln, "expected: res <name> = <a> <b> <var>");
                    } else if (kw == "div") {
                        auto slash = rhs.find('/');
                        if (slash == std::string::npos) fail(ln, "expected: div <name> = <src> / <poly>");
                        st.args.push_back(trim(rhs.substr(0, slash)));
                        st.poly = trim(rhs.substr(slash + 1));
                    } else {
                        fail(ln, "unknown keyword " + kw);
                    }
                }
                s.steps.push_back(std::move(st));
            }
        } catch (const std::invalid_argument& e) {
            std::string what = e.what();
            if (what.rfind(source, 0) == 0) throw;
            fail(ln, what);
        }
    }
    if (s.id.empty()) fail(0, "missing id");
    if (!s.vars) fail(0, "missing vars");
    if (!s.rule.vars) fail(0, "missing rotate");
    if (s.rule.vars != s.vars) fail(0, "rotation rule does not cover exactly the declared variables");
    if (!have_n || !have_exp) fail(0, "missing n or exponent");
    for (int v = 1; v < kMaxVars; ++v)
        if ((s.vars >> v & 1) && !s.conjugate_power.count(v)) fail(0, std::string("missing power for ") + var_name(v));
    return s;
}

SystemScript SystemScript::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open system file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

ConjugateSystem SystemScript::system() const
{
    ConjugateSystem sys;
    sys.id = id;
    sys.rule = rule;
    std::map<std::string, MultiPoly> vals;
    for (auto& st : steps) {
        if (st.op == "seed") {
            vals[st.name] = MultiPoly::parse(st.poly);
        } else if (st.op == "conj") {
            auto it = vals.find(st.args[1]);
            if (it == vals.end()) throw std::invalid_argument("conj of unknown equation " + st.args[1]);
            vals[st.name] = frobenius_rotate(it->second, rule);
        } else {
            continue;
        }
        sys.names.push_back(st.name);
        sys.equations.push_back(vals[st.name]);
    }
    return sys;
}

bool ScriptResult::ok() const
{
    if (checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.ok; });
}

namespace {

// Value of p at (x, x^{2^e_y}, x^{2^e_z}, x^{2^e_u}).
uint32_t eval_conjugate(const Field& F, const MultiPoly& p, uint32_t x, const std::array<int, kMaxVars>& e)
{
    std::array<uint32_t, kMaxVars> val{};
    for (int v = 0; v < kMaxVars; ++v) {
        uint32_t a = x;
        for (int i = 0; i < e[v]; ++i) a = F.sqr_raw(a);
        val[v] = a;
    }
    uint32_t acc = 0;
    for (auto& m : p.terms()) {
        uint32_t t = 1;
        for (int v = 0; v < kMaxVars && t; ++v)
            if (m[v]) t = F.mul_raw(t, F.pow_raw(val[v], uint64_t(m[v])));
        acc ^= t;
    }
    return acc;
}

uint32_t eval_univariate(const Field& F, const BitPoly& p, uint32_t x)
{
    uint32_t acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = F.mul_raw(acc, x) ^ uint32_t(p.coeff(i));
    return acc;
}

std::string short_text(const MultiPoly& p)
{
    std::string s = p.to_string();
    if (s.size() > 160) s = s.substr(0, 150) + "... (" + std::to_string(p.term_count()) + " terms)";
    return s;
}

} // namespace

ScriptResult run_script(const SystemScript& s, const ScriptOptions& opt)
{
    ScriptResult r;
    auto add = [&](std::string what, bool ok, std::string detail = "") {
        r.checks.push_back({std::move(what), ok, std::move(detail)});
    };
    auto get = [&](const std::string& name, int line) -> const MultiPoly& {
        auto it = r.values.find(name);
        if (it == r.values.end())
            throw std::invalid_argument(s.source + ":" + std::to_string(line) + ": unknown name " + name);
        return it->second;
    };
    std::vector<std::pair<std::string, MultiPoly>> divisors;
    std::string seed_name;
    bool have_final = false;
    for (auto& st : s.steps) {
        const std::string where = "line " + std::to_string(st.line) + ": ";
        if (st.op == "seed") {
            MultiPoly p = MultiPoly::parse(st.poly);
            if (p.var_mask() & ~s.vars) throw std::invalid_argument(s.source + ": seed uses undeclared variables");
            r.values[st.name] = p;
            if (seed_name.empty()) seed_name = st.name;
        } else if (st.op == "conj") {
            r.values[st.name] = frobenius_rotate(get(st.args[1], st.line), s.rule);
        } else if (st.op == "printed") {
            MultiPoly want = MultiPoly::parse(st.poly);
            const MultiPoly& got = get(st.name, st.line);
            add("printed " + st.name + " equals the rotation", got == want, got == want ? "" : "rotation gives " + short_text(got));
        } else if (st.op == "misprint") {
            MultiPoly printed = MultiPoly::parse(st.poly);
            const MultiPoly& got = get(st.name, st.line);
            add("printed " + st.name + " recorded as misprint", got != printed,
                got != printed ? "rotation gives " + short_text(got) + "; printed " + short_text(printed)
                               : "printed form equals the rotation, not a misprint");
        } else if (st.op == "res") {
            const MultiPoly& a = get(st.args[0], st.line);
            const MultiPoly& b = get(st.args[1], st.line);
            int v = var_index(st.args[2][0]);
            Intermediate im;
            im.name = st.name;
            im.eliminated = v;
            im.from = st.args[0] + ", " + st.args[1];
            im.value = resultant(a, b, v);
            if (im.value.is_zero()) {
                add(where + "Res(" + im.from + ", " + st.args[2] + ") is nonzero", false, "zero resultant");
                return r;
            }
            if (opt.cross_check_interp) {
                MultiPoly alt = resultant(a, b, v, ResultantPath::interpolation);
                add("Res(" + im.from + ", " + st.args[2] + ") agrees across determinant paths", alt == im.value);
            }
            r.values[st.name] = im.value;
            r.report.intermediates.push_back(std::move(im));
            r.report.order.push_back(v);
        } else if (st.op == "div") {
            MultiPoly d = MultiPoly::parse(st.poly);
            const MultiPoly& a = get(st.args[0], st.line);
            Intermediate im;
            im.name = st.name;
            im.from = st.args[0];
            try {
                im.value = exact_div(a, d);
            } catch (const std::domain_error&) {
                add(where + st.args[0] + " divisible by " + st.poly, false);
                return r;
            }
            im.removed.push_back({d, 1});
            divisors.emplace_back(st.poly, d);
            r.values[st.name] = im.value;
            r.report.intermediates.push_back(std::move(im));
        } else if (st.op == "expect") {
            MultiPoly want = MultiPoly::parse(st.poly);
            const MultiPoly& got = get(st.name, st.line);
            add(st.name + " matches the displayed polynomial", got == want,
                got == want ? std::to_string(got.term_count()) + " terms" : "computed " + short_text(got));
        } else if (st.op == "factors") {
            const MultiPoly& got = get(st.name, st.line);
            Factorization want = Factorization::parse(st.poly);
            want.normalize();
            Factorization f = factor(got.to_univariate(0));
            add(st.name + " factors as displayed", f == want, f == want ? "" : "computed " + f.to_string());
        } else if (st.op == "identity") {
            BitPoly lhs = MultiPoly::parse(st.args[0]).to_univariate(0);
            Factorization want = Factorization::parse(st.poly);
            want.normalize();
            Factorization f = factor(lhs);
            add("identity " + st.args[0], f == want && want.expand() == lhs, f == want ? st.poly : "computed " + f.to_string());
        } else if (st.op == "misfactored") {
            // displayed factorization is wrong but has the same irreducible factors, so the roots agree
            BitPoly lhs = MultiPoly::parse(st.args[0]).to_univariate(0);
            Factorization shown = Factorization::parse(st.poly);
            shown.normalize();
            Factorization f = factor(lhs);
            bool same_support = f.factors.size() == shown.factors.size();
            for (size_t i = 0; same_support && i < f.factors.size(); ++i)
                same_support = f.factors[i].first == shown.factors[i].first;
            add("identity " + st.args[0] + " recorded as misfactored", same_support && shown.expand() != lhs,
                "computed " + f.to_string() + "; displayed " + st.poly);
        } else if (st.op == "final") {
            finish_report(r.report, get(st.name, st.line));
            have_final = true;
        }
    }
    if (!have_final) throw std::invalid_argument(s.source + ": no final step");
    if (seed_name.empty()) throw std::invalid_argument(s.source + ": no seed");

    // rotation closure: one full turn returns the seed up to a Frobenius power
    const MultiPoly& seed = r.values.at(seed_name);
    MultiPoly turned = seed;
    for (int i = 0; i < std::popcount(s.vars); ++i) turned = frobenius_rotate(turned, s.rule);
    auto off = frobenius_offset(seed, turned);
    add("rotation closure", off.has_value(), off ? "full turn = seed^(2^" + std::to_string(*off) + ")" : "full turn gives " + short_text(turned));

    // instance checks at every admissible k with n(k) <= instance_max_n
    int instances = 0;
    for (int k = 1; k <= 64; ++k) {
        std::map<std::string, bigint> env{{"k", k}};
        int n = s.n_of_k.eval(env).convert_to<int>();
        if (n > opt.instance_max_n) break;
        if (n < 2 || !s.admissible.truthy(env)) continue;
        ++instances;
        env["n"] = n;
        Field F(n);
        const bigint M = (bigint(1) << n) - 1;
        bigint dv = s.exponent.eval(env);
        uint64_t d = ((dv % M + M) % M).convert_to<uint64_t>();
        if (d == 0) d = uint64_t(M);
        std::array<int, kMaxVars> e{};
        for (auto& [v, ex] : s.conjugate_power) e[v] = bigint(((ex.eval(env) % n) + n) % n).convert_to<int>();
        const uint64_t dr = reduce_exponent(d, n);
        const std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " d=" + std::to_string(d) + ": ";

        uint64_t seed_mismatch = 0, solutions = 0, unsound = 0;
        std::vector<uint64_t> cof_hits(divisors.size(), 0), cof_bad(divisors.size(), 0);
        for (uint32_t x = 2; x < F.size(); ++x) {
            bool sol = (F.pow_raw(x ^ 1, dr) ^ F.pow_raw(x, dr)) == 1;
            bool seed0 = eval_conjugate(F, seed, x, e) == 0;
            if (sol != seed0) ++seed_mismatch;
            if (sol) {
                ++solutions;
                if (eval_univariate(F, r.report.final, x) != 0) ++unsound;
            }
            for (size_t i = 0; i < divisors.size(); ++i)
                if (eval_conjugate(F, divisors[i].second, x, e) == 0) {
                    ++cof_hits[i];
                    if (sol) ++cof_bad[i];
                }
        }
        add(tag + "seed vanishes exactly at the 0-APN solutions", seed_mismatch == 0,
            std::to_string(seed_mismatch) + " mismatches");
        add(tag + "no solution outside F_2", solutions == 0, std::to_string(solutions) + " solutions");
        add(tag + "every solution is a root of the final polynomial", unsound == 0);
        for (size_t i = 0; i < divisors.size(); ++i)
            add(tag + "removed factor " + divisors[i].first + " vanishes at no solution", cof_bad[i] == 0,
                std::to_string(cof_hits[i]) + " zeros in F_2^n minus F_2");
        add(tag + "candidate subfields hold no solution",
            candidate_subfield_check(n, d, r.report.candidate_subfields));
    }
    add("admissible instances checked", instances > 0, std::to_string(instances) + " with n <= " + std::to_string(opt.instance_max_n));
    return r;
}

std::vector<std::string> builtin_system_ids()
{
    std::vector<std::string> ids;
    for (int i = 1; i <= 14; ++i) ids.push_back("3." + std::to_string(i));
    return ids;
}

std::string system_path(const std::string& id, const std::string& data_dir)
{
    auto ids = builtin_system_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw std::invalid_argument("unknown system id " + id);
    std::string name = id;
    std::replace(name.begin(), name.end(), '.', '_');
    return (data_dir.empty() ? default_data_dir() : data_dir) + "/systems/thm" + name + ".sys";
}

SystemScript builtin_script(const std::string& id, const std::string& data_dir)
{
    SystemScript s = SystemScript::load(system_path(id, data_dir));
    if (s.id != id) throw std::runtime_error(system_path(id, data_dir) + ": id is " + s.id);
    return s;
}

ConjugateSystem builtin_system(const std::string& id, const std::string& data_dir)
{
    return builtin_script(id, data_dir).system();
}

} // namespace zeroapn

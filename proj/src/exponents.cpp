#include "zeroapn/exponents.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zeroapn_config.hpp"

namespace zeroapn {

using json = nlohmann::json;

std::string default_data_dir()
{
    if (const char* env = std::getenv("ZEROAPN_DATA_DIR")) return env;
    return ZEROAPN_DEFAULT_DATA_DIR;
}

std::string default_manifest_path() { return default_data_dir() + "/table1.json"; }

const FamilyDescriptor& FamilyManifest::row(int id) const
{
    for (auto& r : rows)
        if (r.row_id == id) return r;
    throw std::invalid_argument("unknown table row " + std::to_string(id));
}

FamilyManifest FamilyManifest::parse(const std::string& json_text)
{
    json j = json::parse(json_text);
    FamilyManifest m;
    for (auto& r : j.at("rows")) {
        FamilyDescriptor f;
        f.row_id = r.at("row").get<int>();
        f.kind = r.value("kind", std::string("formula"));
        f.label = r.value("label", std::string());
        f.theorem = r.value("theorem", std::string());
        for (auto& p : r.value("params", json::array())) {
            ParamRange pr;
            pr.name = p.at(0).get<std::string>();
            pr.lo = Expr::parse(p.at(1).get<std::string>());
            pr.hi = Expr::parse(p.at(2).get<std::string>());
            f.params.push_back(std::move(pr));
        }
        if (f.kind == "formula") f.formula = Expr::parse(r.at("formula").get<std::string>());
        else if (f.kind == "congruence") {
            f.multiplier = Expr::parse(r.at("multiplier").get<std::string>());
            f.target = Expr::parse(r.at("target").get<std::string>());
        } else
            throw std::invalid_argument("row " + std::to_string(f.row_id) + ": unknown kind " + f.kind);
        f.condition = Expr::parse(r.value("condition", std::string("1")));
        f.condition_as_printed = r.value("condition_as_printed", std::string());
        for (auto& e : r.value("examples", json::array())) f.examples.emplace_back(e.at(0).get<uint64_t>(), e.at(1).get<int>());
        f.gate = r.value("gate", std::string("none"));
        f.note = r.value("note", std::string());
        m.rows.push_back(std::move(f));
    }
    std::sort(m.rows.begin(), m.rows.end(), [](auto& a, auto& b) { return a.row_id < b.row_id; });
    return m;
}

FamilyManifest FamilyManifest::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse(ss.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

const FamilyManifest& builtin_manifest()
{
    static std::once_flag once;
    static FamilyManifest m;
    std::call_once(once, [] { m = FamilyManifest::load(default_manifest_path()); });
    return m;
}

std::vector<uint64_t> solve_linear_congruence(const bigint& a, const bigint& b, uint64_t M)
{
    if (M == 0) throw std::invalid_argument("modulus must be positive");
    bigint Mb = M;
    bigint ar = ((a % Mb) + Mb) % Mb, br = ((b % Mb) + Mb) % Mb;
    // extended gcd on (ar, M)
    bigint g = ar, g1 = Mb, x0 = 1, x1 = 0;
    while (g1 != 0) {
        bigint q = g / g1;
        bigint t = g - q * g1;
        g = g1;
        g1 = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    // g = gcd(ar, M) (g = M when ar = 0)
    std::vector<uint64_t> out;
    if (br % g != 0) return out;
    bigint step = Mb / g;
    bigint x = ((x0 * (br / g)) % step + step) % step;
    for (bigint i = 0; i < g; ++i) out.push_back((x + i * step).convert_to<uint64_t>());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using Env = std::map<std::string, bigint>;

int64_t to_i64(const bigint& v) { return v.convert_to<int64_t>(); }

void sweep(const FamilyDescriptor& row, int n, size_t idx, Env& env, std::vector<Member>& out)
{
    const uint64_t M = (uint64_t(1) << n) - 1;
    auto params_of = [&] {
        std::vector<std::pair<std::string, int64_t>> ps;
        for (auto& p : row.params) ps.emplace_back(p.name, to_i64(env.at(p.name)));
        return ps;
    };
    if (idx == row.params.size()) {
        if (row.kind == "formula") {
            if (!row.condition.truthy(env)) return;
            bigint v = row.formula.eval(env);
            bigint r = ((v % M) + M) % M;
            if (r != 0) out.push_back({r.convert_to<uint64_t>(), params_of()});
        } else {
            bigint a = row.multiplier.eval(env), b = row.target.eval(env);
            for (uint64_t d : solve_linear_congruence(a, b, M)) {
                if (d == 0) continue;
                env["d"] = d;
                bool ok = row.condition.truthy(env);
                env.erase("d");
                if (ok) out.push_back({d, params_of()});
            }
        }
        return;
    }
    auto& p = row.params[idx];
    int64_t lo = to_i64(p.lo.eval(env)), hi = to_i64(p.hi.eval(env));
    for (int64_t v = lo; v <= hi; ++v) {
        env[p.name] = v;
        sweep(row, n, idx + 1, env, out);
    }
    env.erase(p.name);
}

} // namespace

std::vector<Member> family_members_detailed(const FamilyDescriptor& row, int n)
{
    if (n < 1 || n > 62) throw std::invalid_argument("n out of range");
    Env env{{"n", n}};
    std::vector<Member> all;
    sweep(row, n, 0, env, all);
    std::vector<Member> out;
    std::map<uint64_t, size_t> seen;
    for (auto& m : all)
        if (seen.emplace(m.d, out.size()).second) out.push_back(m);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.d < b.d; });
    return out;
}

std::vector<uint64_t> family_members(const FamilyDescriptor& row, int n)
{
    std::vector<uint64_t> ds;
    for (auto& m : family_members_detailed(row, n)) ds.push_back(m.d);
    return ds;
}

std::vector<uint64_t> family_members(int row_id, int n) { return family_members(builtin_manifest().row(row_id), n); }

namespace {
int igcd(int a, int b) { return std::gcd(std::abs(a), std::abs(b)); }
} // namespace

bool gcd_criterion_minus(int n, int m, int k) { return igcd(n, m) == 1 && igcd(n, m - k) == 1; }

bool gcd_criterion_plus_case1(int n, int m, int k)
{
    return (n / igcd(n, k)) % 2 == 1 && igcd(n, m + k) == 1 && igcd(n, m - k) == 1;
}

bool gcd_criterion_plus_case2(int n, int m, int k, uint64_t d)
{
    return d % 3 == 0 && n % 2 == 0 && k % 2 == 1 && m % 2 == 1 && igcd(k, n) == 1 && igcd(m + k, n) == 2 &&
           igcd(m - k, n) == 2;
}

bool gcd_criterion_plus(int n, int m, int k, uint64_t d)
{
    if (n < 1 || n > 62) throw std::invalid_argument("n out of range");
    bigint M = (bigint(1) << n) - 1;
    bigint lhs = ((bigint(1) << k) + 1) * d, rhs = (bigint(1) << m) + 1;
    if ((lhs - rhs) % M != 0)
        throw std::invalid_argument("d = " + std::to_string(d) + " does not solve (2^k+1)d = 2^m+1 (mod 2^n-1)");
    return gcd_criterion_plus_case1(n, m, k) || gcd_criterion_plus_case2(n, m, k, d);
}

uint64_t cor_exponents(int l, int k, int n, char sign)
{
    if (l < 1 || k < 1) throw std::invalid_argument("l and k must be positive");
    if (sign != '-' && sign != '+') throw std::invalid_argument("sign must be '-' or '+'");
    bigint num = (bigint(1) << (l * k)), den = (bigint(1) << k);
    if (sign == '-') {
        num -= 1;
        den -= 1;
    } else {
        num += 1;
        den += 1;
    }
    if (num % den != 0) throw std::domain_error("quotient is not an integer");
    bigint q = num / den;
    bigint M = (bigint(1) << n) - 1;
    // nonzero exponents land in [1, 2^n - 1]
    bigint r = (q - 1) % M + 1;
    return r.convert_to<uint64_t>();
}

} // namespace zeroapn

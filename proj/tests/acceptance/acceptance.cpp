// Acceptance gate: one PASS/FAIL line per criterion, diagnostics indented below it.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "zeroapn/ccz.hpp"
#include "zeroapn/diff.hpp"
#include "zeroapn/exponents.hpp"
#include "zeroapn/gf2n.hpp"
#include "zeroapn/report.hpp"
#include "zeroapn/resultant.hpp"
#include "zeroapn/systems.hpp"

using namespace zeroapn;

namespace {

// Pinned limits.
constexpr int kTableNMin = 6, kTableNMax = 11;
constexpr int kIffMaxN = 14;
constexpr int kScriptMaxN = 14;
constexpr double kHeavyBudgetSeconds = 30 * 60;
constexpr int kRandomResultantTrials = 1000;
constexpr int kRandomResultantMaxDeg = 6;
constexpr int kGcdSweepMaxDeg = 5;
constexpr int kApnImpliesMaxN = 10;
constexpr int kX0MaxN = 8;
constexpr int kInvarianceMaxN = 10;
constexpr int kModulusMaxN = 8;
constexpr int kCczNMin = 6, kCczNMax = 11;
constexpr size_t kMaxDiagnostics = 20;

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::vector<std::string> summary;  // always printed, ahead of the capped notes
    std::vector<std::string> notes;
    void fail(const std::string& why)
    {
        ok = false;
        note(why);
    }
    void note(const std::string& s)
    {
        if (notes.size() < kMaxDiagnostics) notes.push_back(s);
        else if (notes.size() == kMaxDiagnostics) notes.push_back("...");
    }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body)
{
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", secs);
    std::cout << "criterion " << id << " " << (o.ok ? "PASS" : "FAIL") << " " << name << " (" << buf << ")\n";
    for (auto& n : o.summary) std::cout << "    " << n << "\n";
    for (auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    if (!o.ok) ++failures;
}

// Memoized 0-APN verdicts for one n.
class ZeroApnCache {
public:
    explicit ZeroApnCache(int n) : f_(n) {}
    bool operator()(uint64_t d)
    {
        auto it = memo_.find(d);
        if (it != memo_.end()) return it->second;
        return memo_[d] = is_zero_apn(f_, d);
    }

private:
    Field f_;
    std::map<uint64_t, bool> memo_;
};

Outcome table1_gate()
{
    Outcome o;
    auto rep = table1(builtin_manifest(), kTableNMin, kTableNMax);
    for (auto& d : rep.diffs) o.fail(d);
    for (auto& d : rep.notes) o.note("ungated: " + d);
    return o;
}

Outcome congruence_iff(char sign)
{
    Outcome o;
    size_t checked = 0, zero_skipped = 0, missed = 0, wrong = 0;
    bool case2_27 = false;
    for (int n = 2; n <= kIffMaxN; ++n) {
        ZeroApnCache zapn(n);
        const uint64_t M = (uint64_t(1) << n) - 1;
        for (int m = 1; m < n; ++m)
            for (int k = 1; k < n; ++k) {
                const bigint a = sign == '-' ? (bigint(1) << k) - 1 : (bigint(1) << k) + 1;
                const bigint b = sign == '-' ? (bigint(1) << m) - 1 : (bigint(1) << m) + 1;
                for (uint64_t d : solve_linear_congruence(a, b, M)) {
                    if (d == 0) {
                        ++zero_skipped;
                        continue;
                    }
                    const bool pred = sign == '-' ? gcd_criterion_minus(n, m, k) : gcd_criterion_plus(n, m, k, d);
                    const bool got = zapn(d);
                    ++checked;
                    if (pred != got) {
                        ++(got ? missed : wrong);
                        o.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k) +
                               " d=" + std::to_string(d) + ": predicate " + (pred ? "yes" : "no") + ", 0-APN " +
                               (got ? "yes" : "no"));
                    }
                    if (sign == '+' && n == 6 && d == 27 && !gcd_criterion_plus_case1(n, m, k) &&
                        gcd_criterion_plus_case2(n, m, k, d) && got)
                        case2_27 = true;
                }
            }
    }
    if (sign == '+' && !case2_27) o.fail("(n=6, d=27) not certified through case (ii)");
    o.summary.push_back(std::to_string(checked) + " solutions checked, " + std::to_string(zero_skipped) +
                        " with d = 0 skipped");
    o.summary.push_back(std::to_string(missed) + " 0-APN exponents the predicate rejects, " + std::to_string(wrong) +
                        " exponents the predicate accepts that are not 0-APN");
    return o;
}

void script_outcome(Outcome& o, const std::string& id, const ScriptOptions& opt)
{
    auto s = builtin_script(id);
    auto t0 = Clock::now();
    auto r = run_script(s, opt);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > kHeavyBudgetSeconds) o.fail(id + " exceeded the time budget");
    for (auto& c : r.checks)
        if (!c.ok) o.fail(id + ": " + c.what + (c.detail.empty() ? "" : " [" + c.detail + "]"));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    o.summary.push_back(id + (r.ok() ? " reproduced" : " differs") + " (" + buf + ")");
}

Outcome light_scripts()
{
    Outcome o;
    ScriptOptions opt;
    opt.instance_max_n = kScriptMaxN;
    for (auto id : {"3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8", "3.9", "3.11", "3.12", "3.13", "3.14"})
        script_outcome(o, id, opt);
    return o;
}

Outcome heavy_scripts()
{
    Outcome o;
    ScriptOptions opt;
    opt.instance_max_n = kScriptMaxN;
    for (auto id : {"3.1", "3.10"}) script_outcome(o, id, opt);
    return o;
}

BitPoly random_poly(std::mt19937_64& rng, int deg)
{
    uint64_t bits = (rng() & ((uint64_t(1) << deg) - 1)) | (uint64_t(1) << deg);
    return BitPoly::from_u64(bits);
}

int splitting_degree(const BitPoly& f)
{
    int e = 1;
    for (auto& [q, m] : factor(f).factors) e = std::lcm(e, q.degree());
    return e;
}

Outcome resultant_consistency()
{
    Outcome o;
    // interpolation path on every resultant of every script
    ScriptOptions opt;
    opt.cross_check_interp = true;
    opt.instance_max_n = 0;
    for (auto& id : builtin_system_ids()) {
        auto r = run_script(builtin_script(id), opt);
        size_t compared = 0;
        for (auto& c : r.checks)
            if (c.what.find("determinant paths") != std::string::npos) {
                ++compared;
                if (!c.ok) o.fail(id + ": " + c.what);
            }
        if (compared == 0) o.fail(id + ": no interpolation comparison recorded");
    }

    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> deg(1, kRandomResultantMaxDeg);
    for (int t = 0; t < kRandomResultantTrials; ++t) {
        BitPoly f = random_poly(rng, deg(rng)), g = random_poly(rng, deg(rng));
        if (!res_product_formula_check(f, g, splitting_degree(f)))
            o.fail("product formula: f=" + f.to_string() + " g=" + g.to_string());
    }

    size_t pairs = 0;
    for (int df = 1; df <= kGcdSweepMaxDeg; ++df)
        for (uint64_t fb = uint64_t(1) << df; fb < (uint64_t(2) << df); ++fb)
            for (int dg = 1; dg <= kGcdSweepMaxDeg; ++dg)
                for (uint64_t gb = uint64_t(1) << dg; gb < (uint64_t(2) << dg); ++gb) {
                    BitPoly f = BitPoly::from_u64(fb), g = BitPoly::from_u64(gb);
                    const bool zero = res_scalar(f, g) == 0;
                    const bool common = gcd(f, g).degree() > 0;
                    ++pairs;
                    if (zero != common) o.fail("gcd sweep: f=" + f.to_string() + " g=" + g.to_string());
                }
    o.summary.push_back(std::to_string(pairs) + " pairs in the gcd sweep");
    return o;
}

std::string nd(int n, uint64_t d) { return "n=" + std::to_string(n) + " d=" + std::to_string(d); }

Outcome differential_properties()
{
    Outcome o;
    for (int n = 2; n <= kApnImpliesMaxN; ++n) {
        Field f(n);
        for (uint64_t d = 1; d < f.order(); ++d)
            if (is_apn(f, d) && !is_zero_apn(f, d)) o.fail("APN but not 0-APN: " + nd(n, d));
    }
    for (int n = 2; n <= kX0MaxN; ++n) {
        Field f(n);
        for (uint64_t d = 1; d < f.order(); ++d)
            if (is_zero_apn(f, d) != is_x0_apn(f, d, f.zero())) o.fail("fast 0-APN path disagrees: " + nd(n, d));
    }
    for (int n = 2; n <= kInvarianceMaxN; ++n) {
        Field f(n);
        const uint64_t M = f.order();
        for (uint64_t d = 1; d < M; ++d) {
            auto s = spectrum(f, d);
            s.check_invariants();
            if (s != spectrum(f, (2 * d) % M)) o.fail("Frobenius invariance: " + nd(n, d));
            if (uint64_t inv = inverse_exponent(n, d); inv && s != spectrum(f, inv))
                o.fail("inverse invariance: " + nd(n, d));
        }
    }
    for (int n = 3; n <= kModulusMaxN; ++n) {
        BitPoly alt;
        for (uint64_t b = (uint64_t(1) << n) | 1;; b += 2)
            if (BitPoly p = BitPoly::from_u64(b); p != least_irreducible(n) && is_irreducible(p)) {
                alt = p;
                break;
            }
        Field f(n), g(n, alt);
        for (uint64_t d = 1; d < f.order(); ++d)
            if (spectrum(f, d) != spectrum(g, d)) o.fail("modulus dependence: " + nd(n, d));
    }
    const uint32_t u75 = uniformity(Field(7), 5), u981 = uniformity(Field(9), 81);
    if (u75 != 2) o.fail("uniformity(7, 5) = " + std::to_string(u75) + ", expected 2");
    if (u981 != 2) o.fail("uniformity(9, 81) = " + std::to_string(u981) + ", expected 2");
    o.summary.push_back("for reference: uniformity(7, 81) = " + std::to_string(uniformity(Field(7), 81)) +
                        ", uniformity(9, 5) = " + std::to_string(uniformity(Field(9), 5)));
    return o;
}

Outcome ccz_inequivalence()
{
    Outcome o;
    const auto& m = builtin_manifest();
    auto a = ccz_report(m, kCczNMin, kCczNMax), b = ccz_report(m, kCczNMin, kCczNMax);
    std::ostringstream oa, ob;
    print_ccz(oa, a, true);
    print_ccz(ob, b, true);
    if (oa.str() != ob.str()) o.fail("report differs between runs");
    for (auto& c : a.collisions) {
        std::string s = "n=" + std::to_string(c.n) + " class " + std::to_string(c.canonical) + " shared by";
        for (auto& [row, d] : c.members) s += " row " + std::to_string(row) + " (d=" + std::to_string(d) + ")";
        o.fail(s);
    }
    return o;
}

} // namespace

int main()
{
    report(1, "family table examples, n = 6..11", table1_gate);
    report(2, "(2^k-1)d = 2^m-1 criterion, n <= 14", [] { return congruence_iff('-'); });
    report(3, "(2^k+1)d = 2^m+1 criterion, n <= 14", [] { return congruence_iff('+'); });
    report(4, "light elimination chains", light_scripts);
    report(5, "heavy elimination chains", heavy_scripts);
    report(6, "resultant self-consistency", resultant_consistency);
    report(7, "differential-analysis properties", differential_properties);
    report(8, "CCZ classes of the new families, n = 6..11", ccz_inequivalence);
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << "\n";
    return failures ? 1 : 0;
}

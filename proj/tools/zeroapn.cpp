#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zeroapn/bitpoly.hpp"
#include "zeroapn/ccz.hpp"
#include "zeroapn/diff.hpp"
#include "zeroapn/expr.hpp"
#include "zeroapn/multipoly.hpp"
#include "zeroapn/report.hpp"
#include "zeroapn/resultant.hpp"

using namespace zeroapn;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
    bool json_out = false;
    std::string data_dir;
    std::string manifest;
    std::string modulus;
};

FamilyManifest load_manifest(const Globals& g)
{
    if (!g.manifest.empty()) return FamilyManifest::load(g.manifest);
    if (!g.data_dir.empty()) return FamilyManifest::load(g.data_dir + "/table1.json");
    return builtin_manifest();
}

std::unique_ptr<Field> make_field(const Globals& g, int n)
{
    if (n < 1 || n > Field::max_degree)
        throw std::invalid_argument("n must be in [1, " + std::to_string(Field::max_degree) + "]");
    if (g.modulus.empty()) return std::make_unique<Field>(n);
    return std::make_unique<Field>(n, BitPoly::parse(g.modulus));
}

// Exponent text may be an expression in n, e.g. "2^(n-1)-1"; the result is read modulo 2^n - 1.
uint64_t eval_exponent(const std::string& text, int n)
{
    bigint v = Expr::parse(text).eval({{"n", n}});
    if (v >= 0 && v <= bigint(std::numeric_limits<uint64_t>::max())) return v.convert_to<uint64_t>();
    const bigint M = (bigint(1) << n) - 1;
    bigint r = ((v % M) + M) % M;
    return r == 0 ? M.convert_to<uint64_t>() : r.convert_to<uint64_t>();
}

int run_analyze(const Globals& g, int n, const std::string& d_text)
{
    auto f = make_field(g, n);
    RowIndex index(load_manifest(g), n);
    Verdict v = analyze(*f, eval_exponent(d_text, n), &index);
    std::cout << (g.json_out ? to_json(v) : to_text(v)) << "\n";
    return 0;
}

int run_scan(const Globals& g, int n, bool force)
{
    if (n > 14 && !force) throw std::invalid_argument("scan above n = 14 needs --force");
    auto f = make_field(g, n);
    RowIndex index(load_manifest(g), n);
    print_scan(std::cout, scan(*f, &index), g.json_out);
    return 0;
}

int run_table1(const Globals& g, int n_min, int n_max, bool force)
{
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("need 1 <= n_min <= n_max");
    if (n_max > 12 && !force) throw std::invalid_argument("table1 above n = 12 needs --force");
    auto rep = table1(load_manifest(g), n_min, n_max);
    print_table1(std::cout, rep, g.json_out);
    return rep.ok() ? 0 : 1;
}

int run_symbolic(const Globals& g, const std::string& id, bool interp, int max_n)
{
    std::vector<std::string> ids = id == "all" ? builtin_system_ids() : std::vector<std::string>{id};
    ScriptOptions opt;
    opt.cross_check_interp = interp;
    opt.instance_max_n = max_n;
    bool ok = true;
    for (auto& one : ids) {
        SystemScript s = builtin_script(one, g.data_dir);
        ScriptResult r = run_script(s, opt);
        print_script_result(std::cout, s, r, g.json_out);
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

int run_factor(const Globals& g, const std::string& text)
{
    BitPoly p = MultiPoly::parse(text).to_univariate(0);
    Factorization f = factor(p);
    if (g.json_out) {
        json fs = json::array();
        for (auto& [q, e] : f.factors) fs.push_back(json{{"factor", q.to_string()}, {"multiplicity", e}});
        std::cout << json{{"poly", p.to_string()}, {"factors", fs}}.dump() << "\n";
    } else {
        std::cout << f.to_string() << "\n";
    }
    return 0;
}

int run_resultant(const Globals& g, const std::string& a, const std::string& b, const std::string& var, bool interp)
{
    MultiPoly F = MultiPoly::parse(a), G = MultiPoly::parse(b);
    std::string out;
    if (var.empty()) {
        if ((F.var_mask() | G.var_mask()) & ~1u) throw std::invalid_argument("multivariate input needs --var");
        out = std::to_string(res_scalar(F.to_univariate(0), G.to_univariate(0)));
    } else {
        if (var.size() != 1) throw std::invalid_argument("--var takes one of x, y, z, u");
        auto path = interp ? ResultantPath::interpolation : ResultantPath::fraction_free;
        out = resultant(F, G, var_index(var[0]), path).to_string();
    }
    if (g.json_out) std::cout << json{{"resultant", out}}.dump() << "\n";
    else std::cout << out << "\n";
    return 0;
}

int run_ccz(const Globals& g, std::optional<int> n, std::optional<std::string> d1, std::optional<std::string> d2,
            bool families, int n_min, int n_max)
{
    if (families) {
        auto rep = ccz_report(load_manifest(g), n_min, n_max);
        print_ccz(std::cout, rep, g.json_out);
        return rep.ok() ? 0 : 1;
    }
    if (!n || !d1) throw std::invalid_argument("ccz needs n and d, or --families");
    if (*n < 1 || *n > 63) throw std::invalid_argument("n out of range");
    uint64_t a = reduce_exponent(eval_exponent(*d1, *n), *n);
    ExponentClass c = exponent_class(*n, a);
    std::optional<bool> equiv;
    if (d2) equiv = are_ccz_equiv(*n, a, reduce_exponent(eval_exponent(*d2, *n), *n));
    if (g.json_out) {
        json j{{"n", *n}, {"d", a}, {"canonical", c.canonical}, {"invertible", c.invertible}, {"members", c.members}};
        if (equiv) j["equivalent"] = *equiv;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << *n << " d=" << a << " canonical=" << c.canonical
                  << " invertible=" << (c.invertible ? "yes" : "no") << " members=";
        for (size_t i = 0; i < c.members.size(); ++i) std::cout << (i ? "," : "") << c.members[i];
        std::cout << "\n";
        if (equiv) std::cout << "equivalent=" << (*equiv ? "yes" : "no") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"0-APN power functions over GF(2^n): differential analysis, exponent families, symbolic elimination"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json_out, "line-delimited JSON records");
    app.add_option("--data-dir", g.data_dir, "directory holding table1.json and systems/");
    app.add_option("--manifest", g.manifest, "family manifest (overrides --data-dir)");
    app.add_option("--modulus", g.modulus, "irreducible defining GF(2^n), e.g. x^7+x+1");

    int n = 0, n_min = 0, n_max = 0, max_n = 16;
    std::string d_text, id, a_text, b_text, var;
    bool force = false, interp = false, families = false;
    std::optional<int> cn;
    std::optional<std::string> cd1, cd2;
    int ccz_min = 6, ccz_max = 11;

    auto* analyze_cmd = app.add_subcommand("analyze", "verdict for x^d on GF(2^n)");
    analyze_cmd->add_option("n", n)->required();
    analyze_cmd->add_option("d", d_text, "exponent or expression in n")->required();

    auto* scan_cmd = app.add_subcommand("scan", "one verdict per CCZ class of exponents");
    scan_cmd->add_option("n", n)->required();
    scan_cmd->add_flag("--force", force, "allow n above 14");

    auto* table_cmd = app.add_subcommand("table1", "check the family table against its listed examples");
    table_cmd->add_option("n_min", n_min)->required();
    table_cmd->add_option("n_max", n_max)->required();
    table_cmd->add_flag("--force", force, "allow n above 12");

    auto* sym_cmd = app.add_subcommand("symbolic", "run a theorem's elimination script (id like 3.2, or all)");
    sym_cmd->add_option("id", id)->required();
    sym_cmd->add_flag("--interp", interp, "recompute each resultant by interpolation");
    sym_cmd->add_option("--max-n", max_n, "largest n for instance checks");

    auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial over F_2");
    factor_cmd->add_option("poly", a_text)->required();

    auto* res_cmd = app.add_subcommand("resultant", "resultant of two polynomials over F_2");
    res_cmd->add_option("f", a_text)->required();
    res_cmd->add_option("g", b_text)->required();
    res_cmd->add_option("--var", var, "variable to eliminate (multivariate input)");
    res_cmd->add_flag("--interp", interp, "evaluation and interpolation path");

    auto* ccz_cmd = app.add_subcommand("ccz", "CCZ class of a power map, or the family inequivalence report");
    ccz_cmd->add_option("n", cn);
    ccz_cmd->add_option("d", cd1);
    ccz_cmd->add_option("d2", cd2);
    ccz_cmd->add_flag("--families", families, "report classes of the new families across n");
    ccz_cmd->add_option("--n-min", ccz_min);
    ccz_cmd->add_option("--n-max", ccz_max);

    CLI11_PARSE(app, argc, argv);
    try {
        if (*analyze_cmd) return run_analyze(g, n, d_text);
        if (*scan_cmd) return run_scan(g, n, force);
        if (*table_cmd) return run_table1(g, n_min, n_max, force);
        if (*sym_cmd) return run_symbolic(g, id, interp, max_n);
        if (*factor_cmd) return run_factor(g, a_text);
        if (*res_cmd) return run_resultant(g, a_text, b_text, var, interp);
        if (*ccz_cmd) return run_ccz(g, cn, cd1, cd2, families, ccz_min, ccz_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

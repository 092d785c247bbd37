#include "zeroapn/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zeroapn/ccz.hpp"
#include "zeroapn/diff.hpp"
#include "zeroapn/parallel.hpp"

namespace zeroapn {

using json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<uint64_t>& v)
{
    std::string s;
    for (auto d : v) s += (s.empty() ? "" : ",") + std::to_string(d);
    return s;
}

json verdict_json(const Verdict& v)
{
    return json{{"n", v.n},
                {"d_raw", v.d_raw},
                {"d_reduced", v.d_reduced},
                {"d_canonical", v.d_canonical},
                {"uniformity", v.uniformity},
                {"is_apn", v.is_apn},
                {"is_zero_apn", v.is_zero_apn},
                {"matched_rows", v.matched_rows}};
}

} // namespace

RowIndex::RowIndex(const FamilyManifest& m, int n)
{
    for (auto& row : m.rows) {
        std::set<uint64_t> seen;
        for (auto d : family_members(row, n)) seen.insert(canonical_rep(n, d));
        for (auto c : seen) rows_[c].push_back(row.row_id);
    }
}

const std::vector<int>& RowIndex::rows_for(uint64_t canonical) const
{
    static const std::vector<int> none;
    auto it = rows_.find(canonical);
    return it == rows_.end() ? none : it->second;
}

Verdict analyze(const Field& f, uint64_t d, const RowIndex* index)
{
    Verdict v;
    v.n = f.n();
    v.d_raw = d;
    v.d_reduced = reduce_exponent(d, v.n);
    // exponents divisible by 2^n - 1 give constant maps on F_{2^n}^*; they form no class
    const bool degenerate = v.d_reduced % f.order() == 0;
    v.d_canonical = degenerate ? v.d_reduced : canonical_rep(v.n, v.d_reduced);
    v.uniformity = uniformity(f, v.d_reduced);
    v.is_apn = v.uniformity == 2;
    v.is_zero_apn = is_zero_apn(f, v.d_reduced);
    if (index && !degenerate) v.matched_rows = index->rows_for(v.d_canonical);
    return v;
}

std::string to_text(const Verdict& v)
{
    std::ostringstream os;
    os << "n=" << v.n << " d=" << v.d_raw << " reduced=" << v.d_reduced << " canonical=" << v.d_canonical
       << " uniformity=" << v.uniformity << " apn=" << (v.is_apn ? "yes" : "no")
       << " zero_apn=" << (v.is_zero_apn ? "yes" : "no") << " rows=";
    if (v.matched_rows.empty()) os << "-";
    for (size_t i = 0; i < v.matched_rows.size(); ++i) os << (i ? "," : "") << v.matched_rows[i];
    return os.str();
}

std::string to_json(const Verdict& v) { return verdict_json(v).dump(); }

ScanResult scan(const Field& f, const RowIndex* index)
{
    ScanResult r;
    r.n = f.n();
    const uint64_t M = f.order();
    std::set<uint64_t> reps;
    for (uint64_t d = 1; d < M; ++d) reps.insert(canonical_rep(r.n, d));
    std::vector<uint64_t> order(reps.begin(), reps.end());
    r.classes.resize(order.size());
    parallel_for(order.size(), [&](size_t i) { r.classes[i] = analyze(f, order[i], index); });
    for (auto& v : r.classes) {
        if (v.is_apn) ++r.apn;
        else if (v.is_zero_apn) ++r.zero_apn_only;
        else ++r.neither;
    }
    return r;
}

Table1Report table1(const FamilyManifest& m, int n_min, int n_max)
{
    Table1Report rep;
    rep.n_min = n_min;
    rep.n_max = n_max;
    for (auto& row : m.rows) {
        bool any = false;
        for (int n = std::max(n_min, 2); n <= n_max; ++n) {
            Table1Entry e;
            e.row = row.row_id;
            e.n = n;
            e.gate = row.gate;
            std::set<uint64_t> leaders;
            for (auto d : family_members(row, n)) leaders.insert(coset_leader(n, d));
            e.leaders.assign(leaders.begin(), leaders.end());
            std::vector<uint64_t> listed;
            for (auto& [d, en] : row.examples)
                if (en == n && std::find(listed.begin(), listed.end(), d) == listed.end()) listed.push_back(d);
            if (e.leaders.empty() && listed.empty()) continue;
            any = true;
            Field f(n);
            for (auto d : listed) {
                std::vector<std::string> why;
                if (!leaders.count(coset_leader(n, d))) why.push_back("not generated by the row");
                const uint64_t dr = reduce_exponent(d, n);
                if (!is_zero_apn(f, dr)) why.push_back("not 0-APN");
                if (is_apn(f, dr)) why.push_back("APN");
                e.examples.emplace_back(d, why.empty());
                if (why.empty()) continue;
                std::string msg = "row " + std::to_string(row.row_id) + " example (" + std::to_string(d) + ", " +
                                  std::to_string(n) + "):";
                for (auto& w : why) msg += " " + w + ";";
                msg.pop_back();
                (row.gate == "none" ? rep.notes : rep.diffs).push_back(msg);
            }
            rep.entries.push_back(std::move(e));
        }
        if (!any) rep.not_applicable.push_back(row.row_id);
    }
    return rep;
}

CczReport ccz_report(const FamilyManifest& m, int n_min, int n_max, int row_min, int row_max)
{
    CczReport rep;
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.row_min = row_min;
    rep.row_max = row_max;
    for (int n = n_min; n <= n_max; ++n) {
        std::map<uint64_t, std::vector<std::pair<int, uint64_t>>> owners;
        for (auto& row : m.rows) {
            if (row.row_id < row_min || row.row_id > row_max) continue;
            std::map<uint64_t, uint64_t> classes;  // canonical -> first member
            for (auto d : family_members(row, n)) classes.emplace(canonical_rep(n, d), d);
            auto& reps = rep.classes[n][row.row_id];
            for (auto& [c, d] : classes) {
                reps.push_back(c);
                owners[c].emplace_back(row.row_id, d);
            }
        }
        for (auto& [c, who] : owners)
            if (who.size() > 1) rep.collisions.push_back({n, c, who});
    }
    return rep;
}

void print_scan(std::ostream& os, const ScanResult& r, bool json_out)
{
    for (auto& v : r.classes) os << (json_out ? to_json(v) : to_text(v)) << "\n";
    if (json_out)
        os << json{{"summary", "scan"}, {"n", r.n}, {"classes", r.classes.size()}, {"apn", r.apn},
                   {"zero_apn_not_apn", r.zero_apn_only}, {"neither", r.neither}}.dump()
           << "\n";
    else
        os << "n=" << r.n << " classes=" << r.classes.size() << " apn=" << r.apn
           << " zero_apn_not_apn=" << r.zero_apn_only << " neither=" << r.neither << "\n";
}

void print_table1(std::ostream& os, const Table1Report& r, bool json_out)
{
    for (auto& e : r.entries) {
        if (json_out) {
            json ex = json::array();
            for (auto& [d, ok] : e.examples) ex.push_back(json{{"d", d}, {"ok", ok}});
            os << json{{"row", e.row}, {"n", e.n}, {"gate", e.gate}, {"leaders", e.leaders}, {"examples", ex}}.dump()
               << "\n";
            continue;
        }
        os << "row " << e.row << " n=" << e.n << " gate=" << e.gate << " leaders={" << join(e.leaders) << "}";
        if (!e.examples.empty()) {
            os << " examples:";
            for (auto& [d, ok] : e.examples) os << " " << d << (ok ? "" : "!");
        }
        os << "\n";
    }
    for (int row : r.not_applicable) {
        if (json_out) os << json{{"row", row}, {"status", "n/a"}}.dump() << "\n";
        else os << "row " << row << " n/a\n";
    }
    for (auto& d : r.diffs) os << (json_out ? json{{"diff", d}}.dump() : "DIFF " + d) << "\n";
    for (auto& d : r.notes) os << (json_out ? json{{"note", d}}.dump() : "NOTE " + d) << "\n";
    if (json_out)
        os << json{{"summary", "table1"}, {"n_min", r.n_min}, {"n_max", r.n_max}, {"diffs", r.diffs.size()},
                   {"notes", r.notes.size()}}.dump()
           << "\n";
    else
        os << "table1 " << r.n_min << ".." << r.n_max << ": " << r.diffs.size() << " diffs, " << r.notes.size()
           << " ungated notes\n";
}

void print_ccz(std::ostream& os, const CczReport& r, bool json_out)
{
    for (auto& [n, rows] : r.classes)
        for (auto& [row, reps] : rows) {
            if (json_out) os << json{{"n", n}, {"row", row}, {"classes", reps}}.dump() << "\n";
            else os << "n=" << n << " row " << row << " classes={" << join(reps) << "}\n";
        }
    for (auto& c : r.collisions) {
        if (json_out) {
            json who = json::array();
            for (auto& [row, d] : c.members) who.push_back(json{{"row", row}, {"d", d}});
            os << json{{"collision", c.canonical}, {"n", c.n}, {"members", who}}.dump() << "\n";
            continue;
        }
        os << "COLLISION n=" << c.n << " class " << c.canonical << ":";
        for (auto& [row, d] : c.members) os << " row " << row << " d=" << d << ";";
        os << "\n";
    }
    if (json_out)
        os << json{{"summary", "ccz"}, {"n_min", r.n_min}, {"n_max", r.n_max}, {"collisions", r.collisions.size()}}.dump()
           << "\n";
    else
        os << "rows " << r.row_min << ".." << r.row_max << " n=" << r.n_min << ".." << r.n_max << ": "
           << r.collisions.size() << " collisions\n";
}

void print_script_result(std::ostream& os, const SystemScript& s, const ScriptResult& r, bool json_out)
{
    for (auto& c : r.checks) {
        if (json_out) os << json{{"system", s.id}, {"check", c.what}, {"ok", c.ok}, {"detail", c.detail}}.dump() << "\n";
        else os << (c.ok ? "ok   " : "FAIL ") << c.what << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
    }
    // cofactor ledger: every factor removed on the way to the final polynomial
    for (auto& im : r.report.intermediates)
        for (auto& rf : im.removed) {
            if (json_out)
                os << json{{"system", s.id}, {"removed", rf.factor.to_string()}, {"multiplicity", rf.multiplicity},
                           {"from", im.from}, {"into", im.name}}.dump()
                   << "\n";
            else
                os << "removed (" << rf.factor.to_string() << ")^" << rf.multiplicity << " from " << im.from << " giving "
                   << im.name << "\n";
        }
    const std::string fin = r.report.final.is_zero() ? "" : r.report.final_factors.to_string();
    if (json_out)
        os << json{{"summary", "symbolic"}, {"system", s.id}, {"final", fin}, {"ok", r.ok()}}.dump() << "\n";
    else
        os << "system " << s.id << " final " << fin << "\n" << "system " << s.id << (r.ok() ? " PASS" : " FAIL") << "\n";
}

} // namespace zeroapn

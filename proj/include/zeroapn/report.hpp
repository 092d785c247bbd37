#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "zeroapn/exponents.hpp"
#include "zeroapn/gf2n.hpp"
#include "zeroapn/systems.hpp"

namespace zeroapn {

struct Verdict {
    int n = 0;
    uint64_t d_raw = 0;
    uint64_t d_reduced = 0;
    uint64_t d_canonical = 0;
    uint32_t uniformity = 0;
    bool is_apn = false;
    bool is_zero_apn = false;
    std::vector<int> matched_rows;  // table rows whose members share d's CCZ class
};

// Canonical CCZ class -> table rows generating a member of that class at a fixed n.
class RowIndex {
public:
    RowIndex(const FamilyManifest& m, int n);
    const std::vector<int>& rows_for(uint64_t canonical) const;

private:
    std::map<uint64_t, std::vector<int>> rows_;
};

Verdict analyze(const Field& f, uint64_t d, const RowIndex* index = nullptr);
std::string to_text(const Verdict& v);
std::string to_json(const Verdict& v);  // one line

struct ScanResult {
    int n = 0;
    std::vector<Verdict> classes;  // one per CCZ class of d in [1, 2^n - 2], by canonical
    size_t apn = 0, zero_apn_only = 0, neither = 0;
};

// Exhaustive sweep; classes are processed in parallel and reported in canonical order.
ScanResult scan(const Field& f, const RowIndex* index = nullptr);

struct Table1Entry {
    int row = 0;
    int n = 0;
    std::string gate;
    std::vector<uint64_t> leaders;  // cyclotomic coset leaders of the generated members
    std::vector<std::pair<uint64_t, bool>> examples;  // listed d at this n, and whether it checked out
};

struct Table1Report {
    int n_min = 0, n_max = 0;
    std::vector<Table1Entry> entries;
    std::vector<int> not_applicable;  // rows with neither members nor examples in range
    std::vector<std::string> diffs;   // gated failures
    std::vector<std::string> notes;   // failures on rows without a gate
    bool ok() const { return diffs.empty(); }
};

// For every row and n: members generated, listed examples matched by coset leader, checked 0-APN and not APN.
Table1Report table1(const FamilyManifest& m, int n_min, int n_max);

struct CczCollision {
    int n = 0;
    uint64_t canonical = 0;
    std::vector<std::pair<int, uint64_t>> members;  // (row, d) pairs from different rows
};

struct CczReport {
    int n_min = 0, n_max = 0, row_min = 0, row_max = 0;
    std::map<int, std::map<int, std::vector<uint64_t>>> classes;  // n -> row -> canonical reps
    std::vector<CczCollision> collisions;
    bool ok() const { return collisions.empty(); }
};

// Classes of rows [row_min, row_max] at each n; a class shared by two rows is a collision.
CczReport ccz_report(const FamilyManifest& m, int n_min, int n_max, int row_min = 13, int row_max = 28);

void print_scan(std::ostream& os, const ScanResult& r, bool json);
void print_table1(std::ostream& os, const Table1Report& r, bool json);
void print_ccz(std::ostream& os, const CczReport& r, bool json);
void print_script_result(std::ostream& os, const SystemScript& s, const ScriptResult& r, bool json);

} // namespace zeroapn

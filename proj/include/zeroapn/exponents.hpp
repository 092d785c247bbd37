#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zeroapn/expr.hpp"

namespace zeroapn {

struct ParamRange {
    std::string name;
    Expr lo, hi;  // evaluated with n and the earlier parameters bound
};

// One row of the family table: x^formula for every parameter choice passing the condition,
// or, for congruence rows, every solution d of multiplier*d = target (mod 2^n - 1).
struct FamilyDescriptor {
    int row_id = 0;
    std::string kind;  // "formula" or "congruence"
    std::string label;
    std::string theorem;  // empty for prior results
    std::vector<ParamRange> params;
    Expr formula;
    Expr multiplier, target;
    Expr condition;  // may reference n, the parameters and (congruence rows) d
    std::string condition_as_printed;
    std::vector<std::pair<uint64_t, int>> examples;  // (d, n) as listed
    std::string gate;  // "full", "sanity" or "none"
    std::string note;
};

struct FamilyManifest {
    std::vector<FamilyDescriptor> rows;
    const FamilyDescriptor& row(int id) const;
    static FamilyManifest load(const std::string& path);
    static FamilyManifest parse(const std::string& json_text);
};

// Installed manifest location (configure-time default, ZEROAPN_DATA_DIR overrides).
std::string default_data_dir();
std::string default_manifest_path();
const FamilyManifest& builtin_manifest();

struct Member {
    uint64_t d;  // reduced into [1, 2^n - 2]
    std::vector<std::pair<std::string, int64_t>> params;
};

// All members admitted at this n, deduplicated by d (first parameter choice kept), sorted.
std::vector<Member> family_members_detailed(const FamilyDescriptor& row, int n);
std::vector<uint64_t> family_members(const FamilyDescriptor& row, int n);
std::vector<uint64_t> family_members(int row_id, int n);

// All x in [0, M) with a x = b (mod M).
std::vector<uint64_t> solve_linear_congruence(const bigint& a, const bigint& b, uint64_t M);

// (2^k - 1) d = 2^m - 1: 0-APN iff gcd(n, m) = gcd(n, m - k) = 1.
bool gcd_criterion_minus(int n, int m, int k);

// (2^k + 1) d = 2^m + 1: the two-case characterization. Throws if d is not a solution.
bool gcd_criterion_plus(int n, int m, int k, uint64_t d);
bool gcd_criterion_plus_case1(int n, int m, int k);
bool gcd_criterion_plus_case2(int n, int m, int k, uint64_t d);

// (2^{lk} - 1)/(2^k - 1) for '-', (2^{lk} + 1)/(2^k + 1) for '+', reduced mod 2^n - 1.
uint64_t cor_exponents(int l, int k, int n, char sign);

} // namespace zeroapn

#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "zeroapn/bitpoly.hpp"
#include "zeroapn/expr.hpp"
#include "zeroapn/multipoly.hpp"

namespace zeroapn {

// Raising to the 2^k-th power sends each variable to a monomial power of its successor:
// var -> target^(num/den), e.g. "x->y y->z z->x^2" or "x->y^1/2 y->x".
struct RotationRule {
    struct Image {
        int target = -1;
        int num = 1, den = 1;
    };
    std::array<Image, kMaxVars> image{};
    unsigned vars = 0;  // bit mask of variables the rule defines

    static RotationRule parse(const std::string& text);
    std::string to_string() const;
};

// Replaces each variable by its image. When a fractional image leaves a non-integral exponent
// the whole polynomial is squared first (x -> x^2 is the Frobenius map, so the relation is kept).
MultiPoly frobenius_rotate(const MultiPoly& p, const RotationRule& rule);

struct ConjugateSystem {
    std::string id;
    RotationRule rule;
    std::vector<std::string> names;
    std::vector<MultiPoly> equations;
};

struct RemovedFactor {
    MultiPoly factor;
    int multiplicity = 0;
};

struct Intermediate {
    std::string name;
    int eliminated = -1;  // variable index; -1 for division steps
    std::string from;     // operands
    MultiPoly value;      // after cofactor removal
    std::vector<RemovedFactor> removed;
};

struct EliminationReport {
    std::vector<int> order;
    std::vector<Intermediate> intermediates;
    BitPoly final;
    Factorization final_factors;
    std::set<int> candidate_subfields;  // degrees of the irreducible factors other than x, x+1
};

// Pivot per stage: the first equation containing the variable; it is paired with every other
// equation containing it. Factors v and v+1 of intermediates are removed and recorded.
EliminationReport eliminate(const ConjugateSystem& sys, const std::vector<int>& order);

// For each s: every element of F_{2^gcd(s,n)} outside F_2 fails (x+1)^d + x^d + 1 = 0.
bool candidate_subfield_check(int n, uint64_t d, const std::set<int>& degrees);

// One elimination chain transcribed as a script (data/systems/*.sys).
struct SystemScript {
    struct Step {
        std::string op;  // seed, conj, printed, misprint, res, div, expect, factors, identity, misfactored, final
        std::string name;
        std::vector<std::string> args;
        std::string poly;  // polynomial or factorization text
        int line = 0;
    };
    std::string id;
    std::string title;
    RotationRule rule;
    unsigned vars = 0;
    Expr n_of_k, exponent, admissible;
    std::map<int, Expr> conjugate_power;  // var -> e with var = x^{2^e}
    std::vector<Step> steps;
    std::string source;

    static SystemScript parse(const std::string& text, const std::string& source = "<text>");
    static SystemScript load(const std::string& path);
    ConjugateSystem system() const;  // seed and conj equations
};

struct CheckLine {
    std::string what;
    bool ok = false;
    std::string detail;
};

struct ScriptOptions {
    bool cross_check_interp = false;  // recompute every resultant by interpolation
    int instance_max_n = 16;          // instance checks for admissible k with n <= this
};

struct ScriptResult {
    std::vector<CheckLine> checks;
    std::map<std::string, MultiPoly> values;
    EliminationReport report;
    bool ok() const;
};

ScriptResult run_script(const SystemScript& s, const ScriptOptions& opt = {});

// Ids "3.1" .. "3.14".
std::vector<std::string> builtin_system_ids();
std::string system_path(const std::string& id, const std::string& data_dir = "");
SystemScript builtin_script(const std::string& id, const std::string& data_dir = "");
ConjugateSystem builtin_system(const std::string& id, const std::string& data_dir = "");

} // namespace zeroapn

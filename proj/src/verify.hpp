#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solver.hpp"

namespace wythoff {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> witnesses;  // minimal witness first; empty when passing
    std::string note;                    // short token, no spaces
};

struct VerificationReport {
    std::string suite;
    std::uint32_t m = 0;
    std::uint32_t p = 0;
    std::uint64_t bound = 0;  // board bound or index bound, suite-dependent
    double elapsed_ms = 0.0;
    std::vector<CheckResult> checks;

    bool pass() const;
};

// Main Theorem battery on [0, bound]^2:
//  (i)    pset(blocking) equals the unordered Beatty pairs;
//  (ii,a) pset(modulo l=0) equals them iff gcd(m, p) = 1, and for gcd > 1 the
//         witness (0, m*p/gcd) is a Beatty pair classified N;
//  (ii,b) pset(modulo l=m, modulus m*p) equals them;
//  (iii,a) for each l, the ordered pset of the l-shifted game equals
//          {(a_{ip+l}, b_{ip+l})} u {(b_{ip-l}, a_{ip-l})};
//  (iii,b) pset(shifted_choice) equals the unordered pairs.
VerificationReport verify_main_theorem(std::uint32_t m, std::uint32_t p, std::uint32_t bound);

// Arithmetic sweep to index N: difference law b - a = mn, gap law,
// p-complementarity census, scaling identity, complementary equation,
// partition into p complementary pairs, and for p = 1 the classical
// identities a_{b_n} = a_n + b_n and b_n - 1 = a_{b_n - n}.
VerificationReport verify_sequence_lemmas(std::uint32_t m, std::uint32_t p, std::uint64_t N);

// All applicable mex generators reproduce the closed forms on 0..N.
VerificationReport verify_mex_equivalence(std::uint32_t m, std::uint32_t p, std::uint64_t N);

// The four games sharing one P-set (modulo{2,0,3}, blocking{2,3},
// modulo{2,2,6}, shifted_choice{2,3}), plus row multiplicity 3 and diagonal
// differences 2n on the shared set.
VerificationReport verify_figure_coincidences(std::uint32_t bound);

// Exploration: extracted solution, coordinate differences, whether they form
// an arithmetic progression (with the first violating row), and a
// p-complementarity census of c (indexed from 0) and d (indexed from 1).
// Data gathering only; nothing here asserts.
struct ExploreRecord {
    Variant variant;
    std::uint32_t bound = 0;
    ExtractedSolution solution;
    std::vector<std::int64_t> dc;
    bool dc_is_arithmetic = true;
    std::uint64_t ap_first_violation = 0;  // row index, meaningful when not arithmetic
    bool census_pass = true;
    std::int64_t census_hi = -1;
    std::string census_witness;
    // Reconciliation notes for the two published exploration tables, attached
    // when the solved parameters coincide with one of them.
    std::string note;
};

ExploreRecord explore(const Variant& variant, std::uint32_t bound);
ExploreRecord explore_modulo(std::uint32_t m, std::uint32_t l, std::uint32_t p,
                             std::uint32_t bound);

// The four suites above at one parameter set, in a fixed order.
std::vector<VerificationReport> run_all_suites(std::uint32_t m, std::uint32_t p,
                                               std::uint64_t bound);

// Line-oriented key=value records (one line per check plus a summary line per
// suite) and a JSON document. Timing is excluded by default so reports are
// byte-identical across runs.
std::string serialize_kv(const std::vector<VerificationReport>& reports,
                         bool include_timing = false);
std::string serialize_json(const std::vector<VerificationReport>& reports,
                           bool include_timing = false);

}  // namespace wythoff

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "counts.hpp"
#include "formulas.hpp"
#include "tree.hpp"

namespace sto {

struct Witness {
    std::string case_label;
    bool ok;
    std::string detail;
};

struct VerificationReport {
    std::string check_name;
    bool passed = true;
    std::uint64_t cases_tested = 0;
    std::vector<Witness> witnesses;  // failures plus notable confirming extremes
    std::string notes;

    void fail(std::string label, std::string detail = "") {
        passed = false;
        witnesses.push_back({std::move(label), false, std::move(detail)});
    }
    void confirm(std::string label, std::string detail = "") {
        witnesses.push_back({std::move(label), true, std::move(detail)});
    }
};

std::string render_text(const VerificationReport& r);
std::vector<std::string> render_records(const VerificationReport& r);

// For 2 <= N <= n_max, maximize f1(0,0,a,b) over a+b = N; every maximizer must
// satisfy 2^b >= 3a, except N = 2 where (0,2) and (1,1) both attain value 2.
// Corroborating samples at (k,C) in {0,1,10}^2 confirm no smaller-b maximizer
// appears once (k,C) != (0,0).
VerificationReport check_lemma1(int n_max = 46);

struct PropositionGrid {
    int a_max = 8;
    int b_max = 10;
    int c_max = 8;
    int d_max = 10;
    std::vector<Rat> k_values;  // defaults: 0, 1, 5, 100, 1/2, 7/3
    std::vector<Rat> c_values;  // defaults: 0, 1, 7/3
};

// On every grid tuple with 2^b >= 3a and 2^d >= 3c: lambda1 >= 0, lambda2 > 0,
// exact identity lambda1*Delta1 + lambda2*Delta2 = combination value, the
// value is strictly positive, and hence max(Delta1, Delta2) > 0.
VerificationReport check_proposition(const PropositionGrid& grid = {});

// For every n in [lo, hi], the section-5 caterpillar sweep strictly beats the
// best balanced double-broom, by exact comparison.
VerificationReport check_no_double_broom(long lo = 25, long hi = 1000, int jobs = 0);

// Every subtree-calc invariant over all free trees of order <= n_max:
// oracle equivalence, set-mean monotonicity, local >= global, defect bound and
// additivity, vertex additivity, sigma_v unimodality, sum sigma_v = tau.
VerificationReport run_property_suite(int n_max = 10);

struct Diagnostics {
    long n = 0;
    Aggregate global;
    Rat mu;
    Rat density_value;
    int diameter_length = 0;
    long n_minus_diameter = 0;
    std::vector<int> centroid_vertices;
    std::vector<int> core_vertices;
    std::size_t central_part_size = 0;
    int leaf_count = 0;
    bool caterpillar = false;
    long max_off_diameter_branch = 0;
    MuBounds bounds{};  // Cor 3.3 bracket at this order
};

Diagnostics diagnostics(const Tree& t);
std::string render_text(const Diagnostics& d);

// three brooms merged at a common root: two arms of length ~sqrt(n) carrying
// ~log2(n) leaves each, plus a long handle with ~2 log2(n) leaves at the end
Tree fig2_construction(long n);

struct Fig2Params {
    long arm_length;
    long arm_leaves;
    long long_leaves;
    long long_length;
};
Fig2Params fig2_params(long n);

}  // namespace sto

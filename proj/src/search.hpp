#pragma once

#include <cstdint>
#include <vector>

#include "counts.hpp"
#include "formulas.hpp"
#include "tree.hpp"

namespace sto {

struct SearchResult {
    std::vector<Tree> best_trees;                 // every argmax, in canonical order
    std::vector<std::vector<int>> best_forms;     // canonical forms, parallel to best_trees
    Rat best_value;
    std::uint64_t trees_examined = 0;
    double elapsed_seconds = 0.0;
};

inline constexpr int kExhaustiveDefaultCap = 20;
inline constexpr int kExhaustiveHardCap = 24;

// maximum mean subtree order over every isomorphism class of the given order;
// exact cross-multiplied comparisons, deterministic for any worker count
SearchResult exhaustive_optimal(int n, int jobs = 0, int cap = kExhaustiveDefaultCap);

struct DoubleBroomBest {
    long s;
    Aggregate counts;
    Rat mu;
};

// best balanced double-broom on n vertices (ties toward smaller s)
DoubleBroomBest best_double_broom(long n);

struct BroomLocalBest {
    long a;
    long b;
    Rat value;
};

// best broom local mean over a+b = n-1 (ties toward smaller b)
BroomLocalBest best_broom_local(long n);

// caterpillar with stem of l+1 vertices (l = n-1-2m-k), m leaves at each end,
// and k support leaves at stem indices round(a_i * l) for the optimal a_i;
// colliding indices shift outward (then inward if the stem end is reached)
Tree construct_section5_caterpillar(long n, int k, long m);

// sweep of the construction over k, an m-window around floor(2 log2 (0.9 n)) - k/2,
// and single-support-index perturbations within the radius
SearchResult best_caterpillar(long n, int k_min = 0, int k_max = 8, int perturb_radius = 2);

// support indices actually used by the construction (after rounding/collisions)
std::vector<int> caterpillar_support_indices(long stem_edges, int k,
                                             const std::vector<int>* shifts = nullptr);

}  // namespace sto

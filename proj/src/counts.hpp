#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "numbers.hpp"
#include "tree.hpp"

namespace sto {

// one counting question: how many subtrees, and their total order
struct Aggregate {
    Int count;
    Int total;
    bool operator==(const Aggregate&) const = default;
};

// (count, total) of subtrees containing an anchor vertex. Combining two
// groups of branches hanging off the same anchor multiplies the counts and
// adds totals with the shared anchor removed once; attaching across an edge
// adds the empty choice. These two moves are the s-product rule and the
// defect-sum rule written over integer pairs.
struct AnchoredPair {
    Int s{1};
    Int t{1};
};

inline void combine_inplace(AnchoredPair& a, const AnchoredPair& b) {
    // (s,t) <- (sa*sb, sa*tb + sb*ta - sa*sb)
    Int at = a.t;
    a.t = a.s * b.t + b.s * at - a.s * b.s;
    a.s *= b.s;
}

inline AnchoredPair lifted(const AnchoredPair& child) {
    AnchoredPair r;
    r.s = child.s + 1;
    r.t = child.s + child.t + 1;
    return r;
}

// subtrees containing the root and their total order
Aggregate rooted_counts(const Tree& t, int root);

// sigma(T), tau(T)
Aggregate global_counts(const Tree& t);

struct PerVertexCounts {
    std::vector<Int> count;  // sigma_v
    std::vector<Int> total;  // total order of subtrees containing v
};

// all-vertices rooted counts in O(n) big-integer operations via a rerooting
// sweep with prefix/suffix products (no division)
PerVertexCounts per_vertex_counts(const Tree& t);

Rat mean_subtree_order(const Tree& t);
Rat density(const Tree& t);
Rat local_mean(const Tree& t, int v);
Rat defect(const Tree& t, int root);

// mean order of subtrees containing every vertex of A; A empty gives the
// global mean. Contracts the Steiner tree of A to a single vertex, counts
// rooted there, then adds back |Steiner|-1.
Rat set_mean(const Tree& t, const std::vector<int>& a);

// vertex set of the minimal subtree spanning A (A nonempty)
std::vector<int> steiner_vertices(const Tree& t, const std::vector<int>& a);

// { v : sigma_v * (1 + n^(-p/q)) >= sigma }, decided exactly in integers:
// sigma_v^q >= (sigma - sigma_v)^q * n^p. Exponent p/q must lie in (0, 1/2).
std::vector<int> central_part(const Tree& t, unsigned exponent_num = 1, unsigned exponent_den = 4);

// argmax of sigma_v; always one or two vertices (checked)
std::vector<int> subtree_core(const Tree& t);

inline constexpr int kBruteForceCap = 20;

// independent oracle: enumerate every connected vertex subset (smallest-label
// anchor, frontier expansion); optionally only subsets containing `required`
Aggregate brute_force_counts(const Tree& t, const std::optional<std::vector<int>>& required = std::nullopt);

// per-vertex oracle companion (n <= kBruteForceCap)
PerVertexCounts brute_force_per_vertex(const Tree& t);

// ---- fixed-width fast path -------------------------------------------------
// sigma/tau straight from a canonical level sequence; safe in int64 for
// n <= 24 (sigma <= 2^23, totals < 2^29, combine products < 2^52)
struct SigmaTau64 {
    std::int64_t sigma;
    std::int64_t tau;
};

SigmaTau64 sigma_tau_from_levels(const std::vector<int>& levels, std::vector<std::int64_t>& s_buf,
                                 std::vector<std::int64_t>& t_buf, std::vector<int>& parent_buf);

}  // namespace sto

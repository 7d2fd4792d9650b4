#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sto {

// Undirected labeled tree on vertices 0..n-1. Construction validates the
// tree axioms (n-1 edges, connected, labels in range, no duplicates).
class Tree {
  public:
    static Tree from_edges(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    bool is_leaf(int v) const { return adj_[v].size() <= 1; }
    int leaf_count() const;

    // tree that remains when all leaves are deleted is a path (or empty)
    bool is_caterpillar() const;

    bool has_edge(int u, int v) const;

  private:
    Tree() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct RootedTree {
    Tree tree;
    int root;
};

// --- family constructors -------------------------------------------------
// Labeling convention (fixed so emitted files are reproducible): stem/handle
// vertices come first in path order, leaves are appended afterwards.

Tree make_path(int n);
Tree make_star(int n);
// handle 0-1-...-a, b leaves a+1..a+b attached to vertex a; vertex 0 is the
// handle end opposite the leaves
Tree make_broom(int a, int b);
// path of n-2s vertices 0..n-2s-1 with s leaves at each end (left leaves
// first); requires s >= 1 and n-2s >= 2
Tree make_double_broom(int n, int s);
Tree make_unbalanced_double_broom(int path_vertices, int left_leaves, int right_leaves);
// stem 0..stem_edges (stem_edges+1 vertices), m leaves at each stem end,
// one extra leaf per entry of positions (stem indices, sorted nondecreasing)
Tree make_caterpillar(int stem_edges, int m, const std::vector<int>& positions);

struct PathSpec { int n; };
struct StarSpec { int n; };
struct BroomSpec { int a; int b; };
struct DoubleBroomSpec { int n; int s; };
struct UnbalancedDoubleBroomSpec { int path_vertices; int left_leaves; int right_leaves; };
struct CaterpillarSpec { int stem_edges; int m; std::vector<int> positions; };

using FamilySpec = std::variant<PathSpec, StarSpec, BroomSpec, DoubleBroomSpec,
                                UnbalancedDoubleBroomSpec, CaterpillarSpec>;

Tree build_family(const FamilySpec& spec);

// --- text format ----------------------------------------------------------
// line 1: "tree <n>", then n-1 lines "<u> <v>", 0-based, LF-terminated

Tree parse_tree(const std::string& text);
std::string serialize_tree(const Tree& t);

// --- metric / structural primitives ---------------------------------------

struct DiameterResult {
    int length;             // number of edges on a longest path
    std::vector<int> path;  // lexicographically smallest vertex sequence among longest paths
};

DiameterResult diameter(const Tree& t);

// all v such that no component of T - v has more than n/2 vertices; size 1 or 2
std::vector<int> centroid(const Tree& t);

// distances from src to every vertex
std::vector<int> bfs_distances(const Tree& t, int src);

// Isomorphism-invariant depth sequence: root at the centroid (for a centroid
// pair, whichever rooting gives the lexicographically smaller sequence),
// children ordered by descending recursive sequence.
std::vector<int> canonical_form(const Tree& t);

std::string canonical_form_string(const std::vector<int>& form);

// preorder depth sequence -> tree (parent of i = nearest j<i with depth-1)
Tree tree_from_level_sequence(const std::vector<int>& levels);

}  // namespace sto

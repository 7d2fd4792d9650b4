#include "tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sto {

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("tree order must be >= 1");
    if ((int)edges.size() != n - 1)
        throw std::invalid_argument("wrong edge count: expected " + std::to_string(n - 1) +
                                    ", got " + std::to_string(edges.size()));
    Tree t;
    t.n_ = n;
    t.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("vertex label out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    t.edges_ = std::move(edges);
    // connectivity; with n-1 edges this also rules out cycles
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.adj_[v])
            if (!vis[w]) {
                vis[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    if (cnt != n) throw std::invalid_argument("disconnected");
    for (auto& nb : t.adj_) std::sort(nb.begin(), nb.end());
    return t;
}

int Tree::leaf_count() const {
    if (n_ == 1) return 1;
    int c = 0;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) ++c;
    return c;
}

bool Tree::is_caterpillar() const {
    if (n_ <= 3) return true;
    // vertices of degree >= 2 must induce a path
    int inner = 0;
    for (int v = 0; v < n_; ++v)
        if (degree(v) >= 2) ++inner;
    if (inner == 0) return true;  // single edge
    for (int v = 0; v < n_; ++v) {
        if (degree(v) < 2) continue;
        int inner_deg = 0;
        for (int w : adj_[v])
            if (degree(w) >= 2) ++inner_deg;
        if (inner_deg > 2) return false;
    }
    return true;
}

bool Tree::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

// --- families --------------------------------------------------------------

Tree make_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Tree::from_edges(n, std::move(e));
}

Tree make_star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return Tree::from_edges(n, std::move(e));
}

Tree make_broom(int a, int b) {
    if (a < 0 || b < 1) throw std::invalid_argument("broom requires a >= 0, b >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i) e.push_back({i, i + 1});
    for (int j = 0; j < b; ++j) e.push_back({a, a + 1 + j});
    return Tree::from_edges(a + b + 1, std::move(e));
}

Tree make_unbalanced_double_broom(int p, int l, int r) {
    if (p < 2 || l < 1 || r < 1)
        throw std::invalid_argument("double-broom requires path >= 2, leaves >= 1 per end");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < p; ++i) e.push_back({i, i + 1});
    for (int j = 0; j < l; ++j) e.push_back({0, p + j});
    for (int j = 0; j < r; ++j) e.push_back({p - 1, p + l + j});
    return Tree::from_edges(p + l + r, std::move(e));
}

Tree make_double_broom(int n, int s) {
    if (s < 1 || n - 2 * s < 2) throw std::invalid_argument("double-broom requires s >= 1 and n-2s >= 2");
    return make_unbalanced_double_broom(n - 2 * s, s, s);
}

Tree make_caterpillar(int stem_edges, int m, const std::vector<int>& positions) {
    if (stem_edges < 0 || m < 1) throw std::invalid_argument("caterpillar requires stem >= 0, m >= 1");
    if (!std::is_sorted(positions.begin(), positions.end()))
        throw std::invalid_argument("caterpillar positions must be sorted nondecreasing");
    for (int p : positions)
        if (p < 0 || p > stem_edges) throw std::invalid_argument("caterpillar position out of stem range");
    int L = stem_edges, k = (int)positions.size();
    int n = L + 1 + 2 * m + k;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < L; ++i) e.push_back({i, i + 1});
    int next = L + 1;
    for (int j = 0; j < m; ++j) e.push_back({0, next++});
    for (int j = 0; j < m; ++j) e.push_back({L, next++});
    for (int p : positions) e.push_back({p, next++});
    return Tree::from_edges(n, std::move(e));
}

Tree build_family(const FamilySpec& spec) {
    return std::visit(
        [](auto&& s) -> Tree {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return make_path(s.n);
            else if constexpr (std::is_same_v<T, StarSpec>) return make_star(s.n);
            else if constexpr (std::is_same_v<T, BroomSpec>) return make_broom(s.a, s.b);
            else if constexpr (std::is_same_v<T, DoubleBroomSpec>) return make_double_broom(s.n, s.s);
            else if constexpr (std::is_same_v<T, UnbalancedDoubleBroomSpec>)
                return make_unbalanced_double_broom(s.path_vertices, s.left_leaves, s.right_leaves);
            else return make_caterpillar(s.stem_edges, s.m, s.positions);
        },
        spec);
}

// --- text format -----------------------------------------------------------

Tree parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty input");
    std::istringstream header(line);
    std::string tag;
    long n = -1;
    if (!(header >> tag >> n) || tag != "tree" || n < 1)
        throw std::invalid_argument("malformed header, expected 'tree <n>'");
    std::string rest;
    if (header >> rest) throw std::invalid_argument("malformed header, trailing tokens");
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() && in.eof()) break;
        std::istringstream es(line);
        long u, v;
        if (!(es >> u >> v)) throw std::invalid_argument("malformed edge line: '" + line + "'");
        if (es >> rest) throw std::invalid_argument("malformed edge line: '" + line + "'");
        edges.push_back({(int)u, (int)v});
    }
    return Tree::from_edges((int)n, std::move(edges));
}

std::string serialize_tree(const Tree& t) {
    std::ostringstream out;
    out << "tree " << t.order() << "\n";
    for (auto& [u, v] : t.edges()) out << u << " " << v << "\n";
    return out.str();
}

// --- metrics ----------------------------------------------------------------

std::vector<int> bfs_distances(const Tree& t, int src) {
    std::vector<int> dist(t.order(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int w : t.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

DiameterResult diameter(const Tree& t) {
    int n = t.order();
    if (n == 1) return {0, {0}};
    int d = 0;
    std::vector<int> ecc(n, 0);
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(t, v);
        ecc[v] = *std::max_element(dist.begin(), dist.end());
        d = std::max(d, ecc[v]);
    }
    int start = 0;
    while (ecc[start] != d) ++start;
    // unique tree paths: greedily walk from the smallest endpoint, always taking
    // the smallest child that still completes a path of total length d
    auto dist = bfs_distances(t, start);
    std::vector<int> parent(n, -1), order{start};
    {
        std::vector<char> vis(n, 0);
        vis[start] = 1;
        for (size_t i = 0; i < order.size(); ++i) {
            int v = order[i];
            for (int w : t.neighbors(v))
                if (!vis[w]) {
                    vis[w] = 1;
                    parent[w] = v;
                    order.push_back(w);
                }
        }
    }
    std::vector<int> height(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (parent[v] >= 0) height[parent[v]] = std::max(height[parent[v]], height[v] + 1);
    }
    std::vector<int> path{start};
    int cur = start, depth = 0;
    while (depth < d) {
        int next = -1;
        for (int w : t.neighbors(cur)) {
            if (parent[w] != cur) continue;
            if (height[w] == d - depth - 1 && (next < 0 || w < next)) next = w;
        }
        path.push_back(next);
        cur = next;
        ++depth;
    }
    return {d, path};
}

std::vector<int> centroid(const Tree& t) {
    int n = t.order();
    if (n == 1) return {0};
    std::vector<int> parent(n, -1), order{0}, size(n, 1);
    {
        std::vector<char> vis(n, 0);
        vis[0] = 1;
        for (size_t i = 0; i < order.size(); ++i)
            for (int w : t.neighbors(order[i]))
                if (!vis[w]) {
                    vis[w] = 1;
                    parent[w] = order[i];
                    order.push_back(w);
                }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    std::vector<int> result;
    for (int v = 0; v < n; ++v) {
        int worst = n - size[v];
        for (int w : t.neighbors(v))
            if (parent[w] == v) worst = std::max(worst, size[w]);
        if (2 * worst <= n) result.push_back(v);
    }
    return result;
}

namespace {

// depth sequence of the subtree at v, children ordered descending
std::vector<int> canonical_rooted(const Tree& t, int root) {
    int n = t.order();
    std::vector<int> parent(n, -1), order{root};
    {
        std::vector<char> vis(n, 0);
        vis[root] = 1;
        for (size_t i = 0; i < order.size(); ++i)
            for (int w : t.neighbors(order[i]))
                if (!vis[w]) {
                    vis[w] = 1;
                    parent[w] = order[i];
                    order.push_back(w);
                }
    }
    std::vector<std::vector<int>> children(n), seq(n);
    for (int v : order)
        if (parent[v] >= 0) children[parent[v]].push_back(v);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::sort(children[v].begin(), children[v].end(),
                  [&](int a, int b) { return seq[a] > seq[b]; });
        std::vector<int> s{0};
        for (int c : children[v]) {
            for (int d : seq[c]) s.push_back(d + 1);
            seq[c].clear();
            seq[c].shrink_to_fit();
        }
        seq[v] = std::move(s);
    }
    return seq[root];
}

}  // namespace

std::vector<int> canonical_form(const Tree& t) {
    auto c = centroid(t);
    auto form = canonical_rooted(t, c[0]);
    if (c.size() == 2) {
        auto alt = canonical_rooted(t, c[1]);
        if (alt < form) form = std::move(alt);
    }
    return form;
}

std::string canonical_form_string(const std::vector<int>& form) {
    std::string s;
    for (size_t i = 0; i < form.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(form[i]);
    }
    return s;
}

Tree tree_from_level_sequence(const std::vector<int>& levels) {
    int n = (int)levels.size();
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
        if (!stack.empty()) edges.push_back({stack.back(), i});
        stack.push_back(i);
    }
    return Tree::from_edges(n, std::move(edges));
}

}  // namespace sto

#include "counts.hpp"

#include <algorithm>
#include <stdexcept>

namespace sto {

namespace {

struct Traversal {
    std::vector<int> order;    // preorder from the root
    std::vector<int> parent;   // -1 at the root
};

Traversal traverse(const Tree& t, int root) {
    int n = t.order();
    Traversal tr;
    tr.order.reserve(n);
    tr.parent.assign(n, -1);
    std::vector<char> vis(n, 0);
    tr.order.push_back(root);
    vis[root] = 1;
    for (size_t i = 0; i < tr.order.size(); ++i) {
        int v = tr.order[i];
        for (int w : t.neighbors(v))
            if (!vis[w]) {
                vis[w] = 1;
                tr.parent[w] = v;
                tr.order.push_back(w);
            }
    }
    return tr;
}

// down[v] = pair of the subtree below v (relative to root), anchored at v
std::vector<AnchoredPair> down_pass(const Tree& t, const Traversal& tr) {
    std::vector<AnchoredPair> down(t.order());
    for (auto it = tr.order.rbegin(); it != tr.order.rend(); ++it) {
        int v = *it;
        int p = tr.parent[v];
        if (p >= 0) combine_inplace(down[p], lifted(down[v]));
    }
    return down;
}

}  // namespace

Aggregate rooted_counts(const Tree& t, int root) {
    if (root < 0 || root >= t.order()) throw std::invalid_argument("root out of range");
    auto tr = traverse(t, root);
    auto down = down_pass(t, tr);
    return {down[root].s, down[root].t};
}

PerVertexCounts per_vertex_counts(const Tree& t) {
    int n = t.order();
    auto tr = traverse(t, 0);
    auto down = down_pass(t, tr);
    // up[v]: pair anchored at v of the component containing the parent side,
    // i.e. the whole tree minus the branch below v, re-anchored at v. Built
    // top-down with prefix/suffix products over the lifted child pairs.
    std::vector<AnchoredPair> up(n);  // meaningful for v != root as lifted-at-v value
    std::vector<std::vector<int>> children(n);
    for (int v : tr.order)
        if (tr.parent[v] >= 0) children[tr.parent[v]].push_back(v);

    std::vector<AnchoredPair> pref, suf;
    for (int v : tr.order) {
        auto& ch = children[v];
        int k = (int)ch.size();
        if (k == 0) continue;
        pref.assign(k + 1, AnchoredPair{});
        suf.assign(k + 1, AnchoredPair{});
        for (int i = 0; i < k; ++i) {
            pref[i + 1] = pref[i];
            combine_inplace(pref[i + 1], lifted(down[ch[i]]));
        }
        for (int i = k - 1; i >= 0; --i) {
            suf[i] = suf[i + 1];
            combine_inplace(suf[i], lifted(down[ch[i]]));
        }
        for (int i = 0; i < k; ++i) {
            AnchoredPair rest = pref[i];
            combine_inplace(rest, suf[i + 1]);
            if (tr.parent[v] >= 0) combine_inplace(rest, lifted(up[v]));
            // rest is anchored at v and covers everything except branch ch[i]
            up[ch[i]] = rest;
        }
    }
    PerVertexCounts result;
    result.count.resize(n);
    result.total.resize(n);
    for (int v = 0; v < n; ++v) {
        AnchoredPair full = down[v];
        if (tr.parent[v] >= 0) combine_inplace(full, lifted(up[v]));
        result.count[v] = full.s;
        result.total[v] = full.t;
    }
    return result;
}

Aggregate global_counts(const Tree& t) {
    // sigma: every subtree counted once at its vertex nearest the root;
    // tau = sum over vertices of sigma_v (each subtree contributes its order)
    auto tr = traverse(t, 0);
    auto down = down_pass(t, tr);
    Int sigma = 0;
    for (int v = 0; v < t.order(); ++v) sigma += down[v].s;
    auto pv = per_vertex_counts(t);
    Int tau = 0;
    for (int v = 0; v < t.order(); ++v) tau += pv.count[v];
    return {sigma, tau};
}

Rat mean_subtree_order(const Tree& t) {
    auto g = global_counts(t);
    return make_rat(g.total, g.count);
}

Rat density(const Tree& t) {
    auto g = global_counts(t);
    return make_rat(g.total, g.count * t.order());
}

Rat local_mean(const Tree& t, int v) {
    auto r = rooted_counts(t, v);
    return make_rat(r.total, r.count);
}

Rat defect(const Tree& t, int root) {
    auto r = rooted_counts(t, root);
    return Rat(t.order()) - make_rat(r.total, r.count);
}

std::vector<int> steiner_vertices(const Tree& t, const std::vector<int>& a) {
    if (a.empty()) throw std::invalid_argument("steiner set must be nonempty");
    int n = t.order();
    std::vector<char> keep(n, 1), required(n, 0);
    for (int v : a) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
        required[v] = 1;
    }
    // peel leaves that are not required
    std::vector<int> deg(n), queue;
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1 && !required[v]) queue.push_back(v);
    int kept = n;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        if (!keep[v]) continue;
        keep[v] = 0;
        --kept;
        for (int w : t.neighbors(v))
            if (keep[w] && --deg[w] <= 1 && !required[w]) queue.push_back(w);
    }
    std::vector<int> out;
    out.reserve(kept);
    for (int v = 0; v < n; ++v)
        if (keep[v]) out.push_back(v);
    return out;
}

Rat set_mean(const Tree& t, const std::vector<int>& a) {
    if (a.empty()) return mean_subtree_order(t);
    auto w = steiner_vertices(t, a);
    int n = t.order();
    std::vector<char> in_w(n, 0);
    for (int v : w) in_w[v] = 1;
    // contract W to one vertex (label 0 in the new tree)
    std::vector<int> remap(n, -1);
    int next = 1;
    for (int v = 0; v < n; ++v)
        if (!in_w[v]) remap[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto& [u, v] : t.edges()) {
        bool uw = in_w[u], vw = in_w[v];
        if (uw && vw) continue;
        int a2 = uw ? 0 : remap[u];
        int b2 = vw ? 0 : remap[v];
        edges.push_back({a2, b2});
    }
    int m = next;
    Rat mean;
    if (m == 1) {
        mean = Rat(1);
    } else {
        Tree contracted = Tree::from_edges(m, std::move(edges));
        auto r = rooted_counts(contracted, 0);
        mean = make_rat(r.total, r.count);
    }
    return mean + Rat((long)w.size() - 1);
}

std::vector<int> central_part(const Tree& t, unsigned p, unsigned q) {
    if (p == 0 || q == 0 || 2 * p >= q)
        throw std::invalid_argument("central part exponent must lie in (0, 1/2)");
    auto g = global_counts(t);
    auto pv = per_vertex_counts(t);
    Int np;
    mpz_ui_pow_ui(np.get_mpz_t(), (unsigned long)t.order(), p);
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v) {
        // sigma_v * (1 + n^(-p/q)) >= sigma  <=>  sigma_v^q >= (sigma - sigma_v)^q * n^p
        Int lhs, rhs = g.count - pv.count[v];
        mpz_pow_ui(lhs.get_mpz_t(), pv.count[v].get_mpz_t(), q);
        mpz_pow_ui(rhs.get_mpz_t(), rhs.get_mpz_t(), q);
        rhs *= np;
        if (lhs >= rhs) out.push_back(v);
    }
    return out;
}

std::vector<int> subtree_core(const Tree& t) {
    auto pv = per_vertex_counts(t);
    Int best = 0;
    for (auto& c : pv.count) best = std::max(best, c);
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v)
        if (pv.count[v] == best) out.push_back(v);
    if (out.size() > 2) throw std::logic_error("subtree core larger than two vertices");
    return out;
}

// ---- brute force ------------------------------------------------------------
// The oracle deliberately stays primitive: scan every vertex subset as a
// bitmask, keep the connected ones.

namespace {

bool mask_connected(const Tree& t, std::uint32_t mask) {
    std::uint32_t start = mask & (~mask + 1);
    int v = __builtin_ctz(start);
    std::uint32_t seen = start;
    std::uint32_t frontier = start;
    while (frontier) {
        v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        for (int w : t.neighbors(v)) {
            std::uint32_t bit = 1u << w;
            if ((mask & bit) && !(seen & bit)) {
                seen |= bit;
                frontier |= bit;
            }
        }
    }
    return seen == mask;
}

}  // namespace

Aggregate brute_force_counts(const Tree& t, const std::optional<std::vector<int>>& required) {
    int n = t.order();
    if (n > kBruteForceCap)
        throw std::invalid_argument("brute force enumeration capped at n = " +
                                    std::to_string(kBruteForceCap));
    std::uint32_t req = 0;
    if (required)
        for (int v : *required) {
            if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
            req |= 1u << v;
        }
    unsigned long count = 0, total = 0;
    std::uint32_t end = (n == 32) ? 0 : (1u << n);
    for (std::uint32_t mask = 1; mask != end; ++mask) {
        if ((mask & req) != req) continue;
        if (!mask_connected(t, mask)) continue;
        ++count;
        total += (unsigned long)__builtin_popcount(mask);
    }
    return {Int((unsigned long)count), Int((unsigned long)total)};
}

PerVertexCounts brute_force_per_vertex(const Tree& t) {
    int n = t.order();
    if (n > kBruteForceCap)
        throw std::invalid_argument("brute force enumeration capped at n = " +
                                    std::to_string(kBruteForceCap));
    std::vector<unsigned long> count(n, 0), total(n, 0);
    for (std::uint32_t mask = 1, end = 1u << n; mask != end; ++mask) {
        if (!mask_connected(t, mask)) continue;
        int size = __builtin_popcount(mask);
        for (std::uint32_t rest = mask; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            count[v] += 1;
            total[v] += (unsigned long)size;
        }
    }
    PerVertexCounts out;
    out.count.assign(count.begin(), count.end());
    out.total.assign(total.begin(), total.end());
    return out;
}

SigmaTau64 sigma_tau_from_levels(const std::vector<int>& levels, std::vector<std::int64_t>& s,
                                 std::vector<std::int64_t>& t, std::vector<int>& parent) {
    int n = (int)levels.size();
    s.assign(n, 1);
    t.assign(n, 1);
    parent.assign(n, -1);
    // preorder depth list: parent of i is the latest j < i with smaller depth
    {
        static thread_local std::vector<int> stack;
        stack.clear();
        for (int i = 0; i < n; ++i) {
            while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
            if (!stack.empty()) parent[i] = stack.back();
            stack.push_back(i);
        }
    }
    for (int i = n - 1; i >= 1; --i) {
        int p = parent[i];
        std::int64_t ls = s[i] + 1;
        t[p] = s[p] * t[i] + ls * t[p];
        s[p] *= ls;
    }
    std::int64_t sigma = 0, tau = 0;
    for (int i = 0; i < n; ++i) {
        sigma += s[i];
        tau += t[i];
    }
    return {sigma, tau};
}

}  // namespace sto

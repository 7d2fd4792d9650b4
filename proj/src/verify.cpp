#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "freetree.hpp"
#include "search.hpp"

namespace sto {

std::string render_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "check " << r.check_name << ": " << (r.passed ? "PASS" : "FAIL") << " ("
        << r.cases_tested << " cases)\n";
    if (!r.notes.empty()) out << "  " << r.notes << "\n";
    for (auto& w : r.witnesses)
        out << "  " << (w.ok ? "witness" : "FAILURE") << " " << w.case_label
            << (w.detail.empty() ? "" : ": " + w.detail) << "\n";
    return out.str();
}

std::vector<std::string> render_records(const VerificationReport& r) {
    std::vector<std::string> lines;
    for (auto& w : r.witnesses)
        lines.push_back("check=" + r.check_name + " case=" + w.case_label +
                        " status=" + (w.ok ? "pass" : "fail"));
    lines.push_back("check=" + r.check_name + " case=all status=" + (r.passed ? "pass" : "fail"));
    return lines;
}

VerificationReport check_lemma1(int n_max) {
    VerificationReport rep;
    rep.check_name = "lemma1";
    if (n_max < 2) {
        rep.fail("nmax", "need n_max >= 2");
        return rep;
    }
    Rat zero(0);
    for (long n = 2; n <= n_max; ++n) {
        ++rep.cases_tested;
        Rat best(0);
        std::vector<std::pair<long, long>> argmax;
        for (long b = 1; b <= n; ++b) {
            long a = n - b;
            Rat v = f1(zero, zero, a, b);
            if (argmax.empty() || v > best) {
                best = v;
                argmax.assign(1, {a, b});
            } else if (v == best) {
                argmax.push_back({a, b});
            }
        }
        if (n == 2) {
            std::sort(argmax.begin(), argmax.end());
            bool exact = argmax.size() == 2 && argmax[0] == std::make_pair(0L, 2L) &&
                         argmax[1] == std::make_pair(1L, 1L) && best == 2;
            if (exact)
                rep.confirm("N=2", "maximizers (0,2) and (1,1), value 2");
            else
                rep.fail("N=2", "expected the double maximizer (0,2),(1,1) at value 2");
            continue;
        }
        for (auto [a, b] : argmax) {
            if (pow2((unsigned long)b) < 3 * Int(a))
                rep.fail("N=" + std::to_string(n),
                         "maximizer (a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                             ") violates 2^b >= 3a");
        }
    }
    // corroboration: with (k,C) != (0,0), the argmax b never moves below the
    // (k,C) = (0,0) argmax b (monotone prefactors)
    for (long kc : {0L, 1L, 10L}) {
        for (long cc : {0L, 1L, 10L}) {
            if (kc == 0 && cc == 0) continue;
            Rat k(kc), c(cc);
            for (long n : {2L, 5L, 12L, 30L, 46L}) {
                ++rep.cases_tested;
                Rat best0(0), bestk(0);
                long b0 = 0, bk = 0;
                for (long b = 1; b <= n; ++b) {
                    Rat v0 = f1(zero, zero, n - b, b);
                    if (b == 1 || v0 > best0) {
                        best0 = v0;
                        b0 = b;
                    }
                    Rat vk = f1(k, c, n - b, b);
                    if (b == 1 || vk > bestk) {
                        bestk = vk;
                        bk = b;
                    }
                }
                if (bk < b0)
                    rep.fail("N=" + std::to_string(n) + ",k=" + std::to_string(kc) +
                                 ",C=" + std::to_string(cc),
                             "argmax b moved below the k=C=0 argmax");
            }
        }
    }
    rep.notes = "f1(0,0,a,b) maximizers over a+b=N satisfy 2^b >= 3a for 3 <= N <= " +
                std::to_string(n_max);
    return rep;
}

VerificationReport check_proposition(const PropositionGrid& grid_in) {
    PropositionGrid grid = grid_in;
    if (grid.k_values.empty())
        grid.k_values = {Rat(0), Rat(1), Rat(5), Rat(100), make_rat(1, 2), make_rat(7, 3)};
    if (grid.c_values.empty()) grid.c_values = {Rat(0), Rat(1), make_rat(7, 3)};
    VerificationReport rep;
    rep.check_name = "proposition";
    for (long a = 0; a <= grid.a_max; ++a)
        for (long b = 1; b <= grid.b_max; ++b) {
            if (pow2((unsigned long)b) < 3 * Int(a)) continue;
            for (long c = 1; c <= grid.c_max; ++c)
                for (long d = 1; d <= grid.d_max; ++d) {
                    if (pow2((unsigned long)d) < 3 * Int(c)) continue;
                    for (const Rat& k : grid.k_values) {
                        auto lc = lambda_combination(k, a, b, c, d);
                        std::string label = "a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                                            ",c=" + std::to_string(c) + ",d=" + std::to_string(d) +
                                            ",k=" + rat_to_string(k);
                        if (lc.lambda1 < 0) rep.fail(label, "lambda1 < 0");
                        if (!(lc.lambda2 > 0)) rep.fail(label, "lambda2 <= 0");
                        if (!(lc.combination_value > 0)) rep.fail(label, "combination value <= 0");
                        for (const Rat& c_shift : grid.c_values) {
                            ++rep.cases_tested;
                            Rat d1 = f1(k, c_shift, a + c, b + d) - f2(k, c_shift, a, b, c, d);
                            Rat d2 = f1(k, c_shift, a + c - 1, b + d + 1) - f2(k, c_shift, a, b, c, d);
                            Rat lhs = lc.lambda1 * d1 + lc.lambda2 * d2;
                            if (lhs != Rat(lc.combination_value))
                                rep.fail(label + ",C=" + rat_to_string(c_shift),
                                         "identity mismatch: " + rat_to_string(lhs) + " vs " +
                                             rat_to_string(Rat(lc.combination_value)));
                            if (!(d1 > 0) && !(d2 > 0))
                                rep.fail(label + ",C=" + rat_to_string(c_shift),
                                         "neither Delta is positive");
                        }
                    }
                }
        }
    rep.notes = "lambda1 >= 0, lambda2 > 0, exact linear-combination identity, strict positivity";
    return rep;
}

VerificationReport check_no_double_broom(long lo, long hi, int jobs) {
    VerificationReport rep;
    rep.check_name = "no-double-broom";
    if (lo < 25 || hi > 5000 || lo > hi) {
        rep.fail("range", "supported range is 25 <= lo <= hi <= 5000");
        return rep;
    }
    int workers = jobs > 0 ? jobs : (int)std::max(1u, std::thread::hardware_concurrency());
    std::atomic<long> next(lo);
    std::mutex mu;
    bool have_margin = false;
    Rat min_margin(0), max_margin(0);
    long min_n = 0, max_n = 0;
    std::vector<std::pair<long, std::string>> failures;

    auto work = [&]() {
        for (;;) {
            long n = next.fetch_add(1);
            if (n > hi) break;
            auto db = best_double_broom(n);
            auto cat = best_caterpillar(n);
            Rat margin = cat.best_value - db.mu;
            std::lock_guard<std::mutex> lock(mu);
            if (!(margin > 0))
                failures.push_back({n, "margin " + rat_to_string(margin)});
            if (!have_margin || margin < min_margin) {
                min_margin = margin;
                min_n = n;
            }
            if (!have_margin || margin > max_margin) {
                max_margin = margin;
                max_n = n;
            }
            have_margin = true;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    rep.cases_tested = (std::uint64_t)(hi - lo + 1);
    std::sort(failures.begin(), failures.end());
    for (auto& [n, msg] : failures) rep.fail("n=" + std::to_string(n), msg);
    std::ostringstream notes;
    notes << "margin min " << rat_to_decimal(min_margin, 6) << " at n=" << min_n << ", max "
          << rat_to_decimal(max_margin, 6) << " at n=" << max_n;
    rep.notes = notes.str();
    return rep;
}

namespace {

std::string tree_label(const Tree& t) {
    return "tree[" + canonical_form_string(canonical_form(t)) + "]";
}

void check_tree_properties(const Tree& t, VerificationReport& rep) {
    int n = t.order();
    std::string label = tree_label(t);

    auto global = global_counts(t);
    auto pv = per_vertex_counts(t);
    auto oracle_pv = brute_force_per_vertex(t);
    auto oracle_global = brute_force_counts(t);

    // oracle equivalence: global, per-vertex, and rooted counts at every root
    if (global.count != oracle_global.count || global.total != oracle_global.total)
        rep.fail(label, "global counts disagree with enumeration");
    Int tau_check = 0;
    for (int v = 0; v < n; ++v) {
        if (pv.count[v] != oracle_pv.count[v] || pv.total[v] != oracle_pv.total[v])
            rep.fail(label, "per-vertex counts disagree with enumeration at v=" + std::to_string(v));
        auto rooted = rooted_counts(t, v);
        if (rooted.count != oracle_pv.count[v] || rooted.total != oracle_pv.total[v])
            rep.fail(label, "rooted counts disagree with enumeration at root " + std::to_string(v));
        tau_check += pv.count[v];
    }
    if (tau_check != global.total) rep.fail(label, "sum of sigma_v is not tau");

    // local >= global, strict for n >= 2
    Rat mu = make_rat(global.total, global.count);
    for (int v = 0; v < n; ++v) {
        Rat lv = make_rat(pv.total[v], pv.count[v]);
        if (lv < mu || (n >= 2 && lv == mu))
            rep.fail(label, "local mean at " + std::to_string(v) + " not above global mean");
    }

    // defect bound s <= 2^(2*Delta) and defect additivity, at every root
    for (int root = 0; root < n; ++root) {
        Rat delta = defect(t, root);
        const Int& p = delta.get_num();
        const Int& q = delta.get_den();
        Int lhs;
        mpz_pow_ui(lhs.get_mpz_t(), pv.count[root].get_mpz_t(), q.get_ui());
        Int rhs = pow2(2 * p.get_ui());
        if (lhs > rhs) rep.fail(label, "defect bound fails at root " + std::to_string(root));

        // additivity over branches, both for the defect and the local mean
        Rat delta_sum(0), mean_sum(0);
        for (int w : t.neighbors(root)) {
            // branch through w, with root added back
            std::vector<char> in_branch(n, 0);
            std::vector<int> stack{w};
            in_branch[w] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : t.neighbors(v))
                    if (u != root && !in_branch[u]) {
                        in_branch[u] = 1;
                        stack.push_back(u);
                    }
            }
            std::vector<int> remap(n, -1);
            remap[root] = 0;
            int next = 1;
            for (int v = 0; v < n; ++v)
                if (in_branch[v]) remap[v] = next++;
            std::vector<std::pair<int, int>> edges;
            for (auto& [x, y] : t.edges())
                if (remap[x] >= 0 && remap[y] >= 0 &&
                    (x == root ? in_branch[y] : (y == root ? in_branch[x] : true)))
                    edges.push_back({remap[x], remap[y]});
            Tree branch = Tree::from_edges(next, std::move(edges));
            delta_sum += defect(branch, 0);
            mean_sum += local_mean(branch, 0) - 1;
        }
        if (delta_sum != delta) rep.fail(label, "defect additivity fails at root " + std::to_string(root));
        Rat local = make_rat(pv.total[root], pv.count[root]);
        if (mean_sum != local - 1)
            rep.fail(label, "local mean additivity fails at v=" + std::to_string(root));
    }

    // monotonicity of set means over subset pairs, equality iff equal Steiner trees
    std::vector<Rat> means(1u << n);
    std::vector<std::vector<int>> steiners(1u << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> a;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) a.push_back(v);
        means[mask] = set_mean(t, a);
        if (mask) steiners[mask] = steiner_vertices(t, a);
    }
    for (std::uint32_t b = 1; b < (1u << n); ++b) {
        // enumerate subsets a of b
        for (std::uint32_t a = b;; a = (a - 1) & b) {
            if (means[a] > means[b]) {
                rep.fail(label, "set mean not monotone");
                break;
            }
            if (a && means[a] == means[b] && steiners[a] != steiners[b]) {
                rep.fail(label, "set mean equality without equal Steiner trees");
                break;
            }
            if (a == 0) break;
        }
    }

    // sigma_v unimodal along every leaf-to-leaf path; central part connected
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) <= 1) leaves.push_back(v);
    for (size_t i = 0; i < leaves.size(); ++i)
        for (size_t j = i + 1; j < leaves.size(); ++j) {
            // unique path via parent pointers from a BFS
            auto dist = bfs_distances(t, leaves[i]);
            std::vector<int> parent(n, -1), order{leaves[i]};
            std::vector<char> vis(n, 0);
            vis[leaves[i]] = 1;
            for (size_t x = 0; x < order.size(); ++x)
                for (int w : t.neighbors(order[x]))
                    if (!vis[w]) {
                        vis[w] = 1;
                        parent[w] = order[x];
                        order.push_back(w);
                    }
            std::vector<int> path;
            for (int v = leaves[j]; v != -1; v = parent[v]) path.push_back(v);
            bool decreasing = false;
            for (size_t x = 1; x < path.size(); ++x) {
                if (pv.count[path[x]] < pv.count[path[x - 1]]) decreasing = true;
                else if (decreasing && pv.count[path[x]] > pv.count[path[x - 1]]) {
                    rep.fail(label, "sigma_v not unimodal along a leaf path");
                    break;
                }
            }
        }
    auto central = central_part(t);
    if (!central.empty()) {
        std::vector<char> in_c(n, 0);
        for (int v : central) in_c[v] = 1;
        std::vector<int> stack{central[0]};
        std::vector<char> vis(n, 0);
        vis[central[0]] = 1;
        size_t reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(v))
                if (in_c[w] && !vis[w]) {
                    vis[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != central.size()) rep.fail(label, "central part not connected");
    }
    // the subtree core never exceeds two vertices (subtree_core checks internally)
    subtree_core(t);
}

}  // namespace

VerificationReport run_property_suite(int n_max) {
    VerificationReport rep;
    rep.check_name = "properties";
    if (n_max > 12) {
        rep.fail("nmax", "property suite capped at n = 12");
        return rep;
    }
    for (int n = 1; n <= n_max; ++n) {
        generate_free_trees(n, [&](const std::vector<int>& levels) {
            ++rep.cases_tested;
            Tree t = tree_from_level_sequence(levels);
            check_tree_properties(t, rep);
        });
    }
    rep.notes = "oracle equivalence, monotonicity, local bounds, defect rules, unimodality over all free trees with n <= " +
                std::to_string(n_max);
    return rep;
}

// --- diagnostics -------------------------------------------------------------

Diagnostics diagnostics(const Tree& t) {
    Diagnostics d;
    d.n = t.order();
    d.global = global_counts(t);
    d.mu = make_rat(d.global.total, d.global.count);
    d.density_value = make_rat(d.global.total, d.global.count * t.order());
    auto diam = diameter(t);
    d.diameter_length = diam.length;
    d.n_minus_diameter = t.order() - diam.length;
    d.centroid_vertices = centroid(t);
    d.core_vertices = subtree_core(t);
    d.central_part_size = central_part(t).size();
    d.leaf_count = t.leaf_count();
    d.caterpillar = t.is_caterpillar();
    if (t.order() >= 2) d.bounds = max_mu_bounds(t.order());
    // largest branch hanging off the diameter path
    std::vector<char> on_path(t.order(), 0);
    for (int v : diam.path) on_path[v] = 1;
    std::vector<char> vis(t.order(), 0);
    for (int v = 0; v < t.order(); ++v) {
        if (on_path[v] || vis[v]) continue;
        long size = 0;
        std::vector<int> stack{v};
        vis[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++size;
            for (int w : t.neighbors(x))
                if (!on_path[w] && !vis[w]) {
                    vis[w] = 1;
                    stack.push_back(w);
                }
        }
        d.max_off_diameter_branch = std::max(d.max_off_diameter_branch, size);
    }
    return d;
}

std::string render_text(const Diagnostics& d) {
    std::ostringstream out;
    out << "n=" << d.n << " sigma=" << d.global.count.get_str() << " tau=" << d.global.total.get_str()
        << " mu=" << rat_to_string(d.mu) << " (~" << rat_to_decimal(d.mu, 6) << ")"
        << " density=" << rat_to_string(d.density_value) << "\n";
    out << "diameter=" << d.diameter_length << " n-diam=" << d.n_minus_diameter << " leaves="
        << d.leaf_count << " caterpillar=" << (d.caterpillar ? "yes" : "no")
        << " max_off_diameter_branch=" << d.max_off_diameter_branch << "\n";
    out << "centroid={";
    for (size_t i = 0; i < d.centroid_vertices.size(); ++i)
        out << (i ? "," : "") << d.centroid_vertices[i];
    out << "} subtree_core={";
    for (size_t i = 0; i < d.core_vertices.size(); ++i) out << (i ? "," : "") << d.core_vertices[i];
    out << "} central_part_size=" << d.central_part_size << "\n";
    if (d.n >= 2) {
        std::ostringstream b;
        b.setf(std::ios::fixed);
        b.precision(6);
        b << "mu_bounds=[" << d.bounds.lower << ", " << d.bounds.upper << "]";
        out << b.str() << "\n";
    }
    return out.str();
}

Fig2Params fig2_params(long n) {
    Fig2Params p;
    p.arm_length = std::lround(std::sqrt((double)n));
    p.arm_leaves = std::lround(std::log2((double)n));
    p.long_leaves = std::lround(2.0 * std::log2((double)n));
    p.long_length = n - 1 - 2 * p.arm_length - 2 * p.arm_leaves - p.long_leaves;
    return p;
}

Tree fig2_construction(long n) {
    auto p = fig2_params(n);
    if (p.long_length < 1) throw std::invalid_argument("n too small for the three-broom shape");
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    auto add_broom = [&](long handle, long leaves) {
        int prev = 0;
        for (long i = 0; i < handle; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        for (long i = 0; i < leaves; ++i) edges.push_back({prev, next++});
    };
    add_broom(p.arm_length, p.arm_leaves);
    add_broom(p.arm_length, p.arm_leaves);
    add_broom(p.long_length, p.long_leaves);
    return Tree::from_edges((int)n, std::move(edges));
}

}  // namespace sto

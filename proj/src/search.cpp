#include "search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "freetree.hpp"

namespace sto {

namespace {

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

struct LocalBest {
    std::int64_t sigma = 0;
    std::int64_t tau = -1;  // tau/sigma below anything real
    std::vector<std::vector<int>> layouts;

    // exact mu comparison by cross multiplication
    void offer(std::int64_t s, std::int64_t t, const std::vector<int>& levels) {
        if (tau < 0 || (__int128)t * sigma > (__int128)tau * s) {
            sigma = s;
            tau = t;
            layouts.assign(1, levels);
        } else if ((__int128)t * sigma == (__int128)tau * s) {
            layouts.push_back(levels);
        }
    }

    void merge(LocalBest&& other) {
        if (other.tau < 0) return;
        if (tau < 0 || (__int128)other.tau * sigma > (__int128)tau * other.sigma) {
            *this = std::move(other);
        } else if ((__int128)other.tau * sigma == (__int128)tau * other.sigma) {
            for (auto& l : other.layouts) layouts.push_back(std::move(l));
        }
    }
};

}  // namespace

SearchResult exhaustive_optimal(int n, int jobs, int cap) {
    if (cap > kExhaustiveHardCap) cap = kExhaustiveHardCap;
    if (n < 2 || n > cap)
        throw std::invalid_argument("exhaustive search supports 2 <= n <= " + std::to_string(cap));
    auto start = std::chrono::steady_clock::now();
    int workers = resolve_jobs(jobs);

    FreeTreeStream stream(n);
    std::mutex stream_mu;
    std::uint64_t examined = 0;
    LocalBest global;
    std::mutex merge_mu;

    auto work = [&]() {
        LocalBest local;
        std::vector<std::vector<int>> batch;
        std::vector<std::int64_t> sbuf, tbuf;
        std::vector<int> pbuf;
        const int kBatch = 128;
        batch.reserve(kBatch);
        std::vector<int> levels;
        for (;;) {
            batch.clear();
            {
                std::lock_guard<std::mutex> lock(stream_mu);
                while ((int)batch.size() < kBatch && stream.next(levels)) batch.push_back(levels);
                examined += batch.size();
            }
            if (batch.empty()) break;
            for (auto& l : batch) {
                auto st = sigma_tau_from_levels(l, sbuf, tbuf, pbuf);
                local.offer(st.sigma, st.tau, l);
            }
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        global.merge(std::move(local));
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    SearchResult result;
    result.trees_examined = examined;
    result.best_value = make_rat(Int((long)global.tau), Int((long)global.sigma));
    std::vector<std::pair<std::vector<int>, Tree>> ranked;
    for (auto& layout : global.layouts) {
        Tree t = tree_from_level_sequence(layout);
        ranked.push_back({canonical_form(t), std::move(t)});
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [form, tree] : ranked) {
        result.best_forms.push_back(form);
        result.best_trees.push_back(std::move(tree));
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

DoubleBroomBest best_double_broom(long n) {
    if (n < 4) throw std::invalid_argument("double-broom search needs n >= 4");
    DoubleBroomBest best{0, {}, Rat(0)};
    for (long s = 1; n - 2 * s >= 2; ++s) {
        // mu(s) < n - s always, so once n - s cannot beat the incumbent, stop
        if (best.s != 0 && Rat(n - s) <= best.mu) break;
        auto agg = double_broom_counts(n, s);
        Rat mu = make_rat(agg.total, agg.count);
        if (best.s == 0 || mu > best.mu) best = {s, std::move(agg), std::move(mu)};
    }
    return best;
}

BroomLocalBest best_broom_local(long n) {
    if (n < 3) throw std::invalid_argument("broom search needs n >= 3");
    BroomLocalBest best{0, 0, Rat(0)};
    for (long b = 1; b <= n - 1; ++b) {
        // value is below n - b/2, so the tail cannot improve once that bound drops
        if (best.b != 0 && make_rat(2 * n - b, 2) <= best.value) break;
        long a = n - 1 - b;
        Rat v = broom_local_mean(n, a, b);
        if (best.b == 0 || v > best.value) best = {a, b, std::move(v)};
    }
    return best;
}

std::vector<int> caterpillar_support_indices(long stem_edges, int k, const std::vector<int>* shifts) {
    auto pos = optimal_positions(k);
    std::vector<int> taken;
    std::vector<char> used(stem_edges + 1, 0);
    for (int i = 0; i < k; ++i) {
        // round(a_i * l) exactly: floor((2*num*l + den) / (2*den))
        Int num = pos[i].get_num() * stem_edges * 2 + pos[i].get_den();
        Int den = pos[i].get_den() * 2;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        long j = q.get_si();
        if (shifts) j += (*shifts)[i];
        j = std::clamp(j, 0L, stem_edges);
        // collisions shift outward (positions cluster near the stem ends);
        // fall back inward when the end of the stem is reached
        long dir = (2 * j <= stem_edges) ? -1 : 1;
        long probe = j;
        while (probe >= 0 && probe <= stem_edges && used[probe]) probe += dir;
        if (probe < 0 || probe > stem_edges) {
            probe = j;
            while (probe >= 0 && probe <= stem_edges && used[probe]) probe -= dir;
            if (probe < 0 || probe > stem_edges)
                throw std::invalid_argument("no free support index on the stem");
        }
        used[probe] = 1;
        taken.push_back((int)probe);
    }
    std::sort(taken.begin(), taken.end());
    return taken;
}

Tree construct_section5_caterpillar(long n, int k, long m) {
    if (k < 0 || m < 1) throw std::invalid_argument("caterpillar needs k >= 0, m >= 1");
    long l = n - 1 - 2 * m - k;
    if (l < k || l < 1) throw std::invalid_argument("infeasible caterpillar parameters");
    auto supports = caterpillar_support_indices(l, k);
    return make_caterpillar((int)l, (int)m, supports);
}

SearchResult best_caterpillar(long n, int k_min, int k_max, int perturb_radius) {
    if (n < 25) throw std::invalid_argument("caterpillar sweep expects n >= 25");
    auto start = std::chrono::steady_clock::now();

    struct Candidate {
        Aggregate agg;
        int k;
        long m;
        std::vector<int> supports;
    };
    std::vector<Candidate> best;
    Rat best_mu(0);
    std::uint64_t examined = 0;

    auto consider = [&](long l, long m, int k, const std::vector<int>& supports) {
        Tree t = make_caterpillar((int)l, (int)m, supports);
        auto agg = global_counts(t);
        Rat mu = make_rat(agg.total, agg.count);
        ++examined;
        if (best.empty() || mu > best_mu) {
            best_mu = mu;
            best.clear();
            best.push_back({std::move(agg), k, m, supports});
        } else if (mu == best_mu) {
            best.push_back({std::move(agg), k, m, supports});
        }
    };

    for (int k = k_min; k <= k_max; ++k) {
        long center = (long)std::floor(2.0 * std::log2(0.9 * (double)n)) - k / 2;
        for (long m = std::max(1L, center - 3); m <= center + 3; ++m) {
            long l = n - 1 - 2 * m - k;
            if (l < std::max(k, 1)) continue;
            consider(l, m, k, caterpillar_support_indices(l, k));
            std::vector<int> shifts(k, 0);
            for (int i = 0; i < k; ++i) {
                for (int d = -perturb_radius; d <= perturb_radius; ++d) {
                    if (d == 0) continue;
                    shifts[i] = d;
                    consider(l, m, k, caterpillar_support_indices(l, k, &shifts));
                }
                shifts[i] = 0;
            }
        }
    }

    SearchResult result;
    result.trees_examined = examined;
    result.best_value = best_mu;
    std::vector<std::pair<std::vector<int>, Tree>> ranked;
    for (auto& c : best) {
        long l = n - 1 - 2 * c.m - c.k;
        Tree t = make_caterpillar((int)l, (int)c.m, c.supports);
        auto form = canonical_form(t);
        bool dup = false;
        for (auto& [f, _] : ranked)
            if (f == form) {
                dup = true;
                break;
            }
        if (!dup) ranked.push_back({std::move(form), std::move(t)});
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [form, tree] : ranked) {
        result.best_forms.push_back(form);
        result.best_trees.push_back(std::move(tree));
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace sto

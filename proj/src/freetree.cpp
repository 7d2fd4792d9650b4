#include "freetree.hpp"

#include <algorithm>
#include <stdexcept>

namespace sto {

FreeTreeStream::FreeTreeStream(int n, int cap) : n_(n) {
    if (n < 1) throw std::invalid_argument("free tree order must be >= 1");
    if (n > cap) throw std::invalid_argument("free tree order " + std::to_string(n) +
                                             " exceeds cap " + std::to_string(cap));
    if (n == 1) {
        single_pending_ = true;
        return;
    }
    // start at the path rooted at its center
    candidate_.reserve(n);
    for (int i = 0; i <= n / 2; ++i) candidate_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) candidate_.push_back(i);
}

// Beyer-Hedetniemi successor in place; p < 0 means "locate the chop point".
// Returns false when the enumeration is exhausted.
bool FreeTreeStream::next_rooted(std::vector<int>& seq, int p) {
    if (p < 0) {
        p = (int)seq.size() - 1;
        while (seq[p] == 1) --p;
    }
    if (p == 0) return false;
    int q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (int i = p; i < (int)seq.size(); ++i) seq[i] = seq[i - p + q];
    return true;
}

// WROM validity: split off the first principal subtree ("left", depths
// shifted down by one) and compare against the remainder rooted at the root.
bool FreeTreeStream::valid_free(const std::vector<int>& seq, int& left_size, int& left_height) {
    int n = (int)seq.size();
    int m = n;  // index where the second depth-1 vertex starts
    for (int i = 2; i < n; ++i)
        if (seq[i] == 1) {
            m = i;
            break;
        }
    left_size = m - 1;
    int lh = 0, rh = 0;
    for (int i = 1; i < m; ++i) lh = std::max(lh, seq[i] - 1);
    for (int i = m; i < n; ++i) rh = std::max(rh, seq[i]);
    left_height = lh;
    if (rh < lh) return false;
    if (rh > lh) return true;
    int rest_size = n - m + 1;
    if (left_size > rest_size) return false;
    if (left_size < rest_size) return true;
    // equal sizes: left must not come after rest lexicographically;
    // left element i is seq[1+i]-1, rest element 0 is the root, then seq[m+i-1]
    for (int i = 0; i < left_size; ++i) {
        int lv = seq[1 + i] - 1;
        int rv = (i == 0) ? 0 : seq[m + i - 1];
        if (lv != rv) return lv < rv;
    }
    return true;
}

bool FreeTreeStream::next(std::vector<int>& levels) {
    if (single_pending_) {
        levels.assign(1, 0);
        single_pending_ = false;
        done_ = true;
        return true;
    }
    if (done_ || candidate_.empty()) return false;
    int left_size = 0, left_height = 0;
    if (!valid_free(candidate_, left_size, left_height)) {
        // skip: all successors sharing the left subtree prefix are invalid too
        int chop_level = candidate_[left_size];
        if (!next_rooted(candidate_, left_size)) {
            done_ = true;
            return false;
        }
        if (chop_level > 2) {
            int ls = 0, lh = 0;
            valid_free(candidate_, ls, lh);
            // re-tail with a path so the remainder reaches full height again
            int suffix_len = lh + 1;
            int base = (int)candidate_.size() - suffix_len;
            for (int i = 0; i < suffix_len; ++i) candidate_[base + i] = i + 1;
        }
    }
    levels = candidate_;
    if (!next_rooted(candidate_, -1)) done_ = true;
    return true;
}

std::uint64_t generate_free_trees(int n, const std::function<void(const std::vector<int>&)>& fn,
                                  int cap) {
    FreeTreeStream stream(n, cap);
    std::vector<int> levels;
    std::uint64_t count = 0;
    while (stream.next(levels)) {
        ++count;
        fn(levels);
    }
    return count;
}

std::uint64_t count_free_trees(int n, int cap) {
    FreeTreeStream stream(n, cap);
    std::vector<int> levels;
    std::uint64_t count = 0;
    while (stream.next(levels)) ++count;
    return count;
}

}  // namespace sto

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sto {

// Enumeration of free (unlabeled, unrooted) trees, one representative per
// isomorphism class, as canonical level sequences: preorder depth lists of a
// rooted embedding, root depth 0. Successor-based (constant amortized work):
// Beyer-Hedetniemi steps over canonical rooted sequences with the
// Wright-Richmond-Odlyzko-McKay validity test and skip rule for free trees.
class FreeTreeStream {
  public:
    static constexpr int kDefaultCap = 24;

    explicit FreeTreeStream(int n, int cap = kDefaultCap);

    // fills `levels` with the next level sequence; false when exhausted
    bool next(std::vector<int>& levels);

    int order() const { return n_; }

  private:
    int n_;
    bool done_ = false;
    bool single_pending_ = false;
    std::vector<int> candidate_;

    static bool next_rooted(std::vector<int>& seq, int p);
    static bool valid_free(const std::vector<int>& seq, int& left_size, int& left_height);
};

// convenience: callback per tree, returns number generated
std::uint64_t generate_free_trees(int n, const std::function<void(const std::vector<int>&)>& fn,
                                  int cap = FreeTreeStream::kDefaultCap);

std::uint64_t count_free_trees(int n, int cap = FreeTreeStream::kDefaultCap);

}  // namespace sto

#ifndef PIPART_SUBSETS_HPP
#define PIPART_SUBSETS_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace pipart {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Visits every k-subset of {0..n-1} in lexicographic order. fn receives the
// subset as an ascending vector and returns false to stop early.
template <class F>
void for_each_k_subset(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0) {
        fn(idx);
        return;
    }
    for (;;) {
        if (!fn(static_cast<const std::vector<int>&>(idx))) return;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Same, but over the given (ascending) item list instead of {0..n-1}.
template <class F>
void for_each_k_subset_of(const std::vector<int>& items, int k, F&& fn) {
    for_each_k_subset(static_cast<int>(items.size()), k, [&](const std::vector<int>& pos) {
        std::vector<int> sub(pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) sub[i] = items[static_cast<std::size_t>(pos[i])];
        return fn(static_cast<const std::vector<int>&>(sub));
    });
}

} // namespace pipart

#endif

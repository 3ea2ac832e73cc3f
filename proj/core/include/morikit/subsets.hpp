#ifndef MORIKIT_SUBSETS_HPP
#define MORIKIT_SUBSETS_HPP

#include <vector>

namespace morikit {

/** Calls fn(subset) on every k-subset of {0,...,n-1} in lexicographic order. */
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(subset));
        int pos = k - 1;
        while (pos >= 0 && subset[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int j = pos + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

} // namespace morikit

#endif

#ifndef RESOLVENT_PARTITION_HPP
#define RESOLVENT_PARTITION_HPP

#include <algorithm>
#include <vector>

#include "resolvent/errors.hpp"

namespace resolvent {

// Weakly decreasing sequence of positive integers; empty partition allowed.
using Partition = std::vector<long>;

inline long partition_weight(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

// All partitions of n in ascending lexicographic order (as integer vectors).
inline std::vector<Partition> partitions(long n) {
    if (n < 0) throw argument_error("partitions: n must be >= 0");
    std::vector<Partition> out;
    Partition cur;
    // recursive descent: each part bounded above by the previous one, so the
    // sequences come out weakly decreasing
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long part = 1; part <= std::min(rest, maxpart); ++part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    for (long s = 1; s <= p[0]; ++s) {
        long count = 0;
        for (long part : p)
            if (part >= s) ++count;
        out.push_back(count);
    }
    return out;
}

// lambda dominates mu: all prefix sums of lambda are >= those of mu.
// Requires equal weights.
inline bool dominates(const Partition& lambda, const Partition& mu) {
    if (partition_weight(lambda) != partition_weight(mu))
        throw argument_error("dominates: partitions of different weights");
    long sl = 0, sm = 0;
    const std::size_t k = std::max(lambda.size(), mu.size());
    for (std::size_t i = 0; i < k; ++i) {
        sl += i < lambda.size() ? lambda[i] : 0;
        sm += i < mu.size() ? mu[i] : 0;
        if (sl < sm) return false;
    }
    return true;
}

// Weakly decreasing rearrangement of the positive entries.
inline Partition shape_of(const std::vector<long>& exps) {
    Partition p;
    for (long e : exps)
        if (e > 0) p.push_back(e);
    std::sort(p.rbegin(), p.rend());
    return p;
}

}  // namespace resolvent

#endif

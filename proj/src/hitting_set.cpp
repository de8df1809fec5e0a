#include "girth/hitting_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace girth {

std::uint64_t hitting_set_size_bound(int n, int x, int k) {
    if (n < 1 || x < 1 || k < 1) throw Error("size bound needs n, x, k >= 1");
    return static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(n) / x * std::log(static_cast<double>(k))));
}

namespace detail {

HittingSet greedy_core(const SetSystem& sys) {
    const int n = sys.universe_size;
    const int k = static_cast<int>(sys.sets.size());
    HittingSet out;
    out.covered_by.assign(k, -1);
    if (k == 0) return out;

    std::uint64_t ops = 0;

    // multiplicities t(u), validated as we go
    std::vector<int> t(n, 0);
    std::vector<int> stamp(n, -1);
    for (int i = 0; i < k; ++i) {
        if (sys.sets[i].empty())
            throw Error("hitting set: set " + std::to_string(i) + " is empty");
        for (int u : sys.sets[i]) {
            if (u < 0 || u >= n)
                throw Error("hitting set: element " + std::to_string(u) + " outside universe");
            if (stamp[u] == i)
                throw Error("hitting set: duplicate element " + std::to_string(u) + " in set " +
                            std::to_string(i));
            stamp[u] = i;
            ++t[u];
            ++ops;
        }
    }

    // element -> containing sets (CSR over the same traversal)
    std::vector<int> off(n + 1, 0);
    for (int u = 0; u < n; ++u) off[u + 1] = off[u] + t[u];
    std::vector<int> containing(off[n]);
    {
        std::vector<int> cur(off.begin(), off.end() - 1);
        for (int i = 0; i < k; ++i)
            for (int u : sys.sets[i]) {
                containing[cur[u]++] = i;
                ++ops;
            }
    }

    int max_t = 0;
    for (int u = 0; u < n; ++u) max_t = std::max(max_t, t[u]);
    std::vector<std::vector<int>> buckets(max_t + 1);
    for (int u = 0; u < n; ++u)
        if (t[u] > 0) {
            buckets[t[u]].push_back(u);
            ++ops;
        }

    std::vector<char> picked(n, 0), retired(k, 0);
    int alive = k;

    // The level pointer only descends: nothing ever moves up a bucket, so
    // once it reaches a level that bucket only loses entries. Sorting the
    // bucket on arrival therefore fixes the smallest-id pick order once;
    // entries invalidated later are skipped lazily.
    for (int level = max_t; level >= 1 && alive > 0; --level) {
        auto& bucket = buckets[level];
        ops += bucket.size() + 1;
        bucket.erase(std::remove_if(bucket.begin(), bucket.end(),
                                    [&](int u) { return t[u] != level || picked[u]; }),
                     bucket.end());
        std::sort(bucket.begin(), bucket.end());
        ops += bucket.size();
        for (std::size_t cur = 0; cur < bucket.size() && alive > 0; ++cur) {
            int u = bucket[cur];
            ++ops;
            if (t[u] != level || picked[u]) continue;  // decremented after the sort
            picked[u] = 1;
            out.elements.push_back(u);
            for (int idx = off[u]; idx < off[u + 1]; ++idx) {
                int i = containing[idx];
                ++ops;
                if (retired[i]) continue;
                retired[i] = 1;
                out.covered_by[i] = u;
                --alive;
                for (int v : sys.sets[i]) {
                    ++ops;
                    if (picked[v]) continue;
                    if (--t[v] > 0) {
                        buckets[t[v]].push_back(v);
                        ++ops;
                    }
                }
            }
        }
    }
    if (alive != 0) throw std::logic_error("hitting set greedy failed to cover all sets");
    out.ops = ops;
    return out;
}

SetSystem closest_node_sets_padded(const Graph& g, int size, std::uint64_t* dequeues) {
    if (size < 1) throw Error("closest_node_sets: size must be positive");
    const int n = g.num_vertices();
    SetSystem sys;
    sys.universe_size = n;
    sys.sets.resize(n);
    std::vector<int> seen(n, 0);
    std::vector<int> queue;
    queue.reserve(n);
    int epoch = 0;
    std::uint64_t total = 0;
    for (int u = 0; u < n; ++u) {
        ++epoch;
        queue.clear();
        seen[u] = epoch;
        queue.push_back(u);
        bool full = queue.size() >= static_cast<std::size_t>(size);
        for (std::size_t head = 0; head < queue.size() && !full; ++head) {
            int a = queue[head];
            ++total;
            for (int v : g.neighbors(a)) {
                if (seen[v] == epoch) continue;
                seen[v] = epoch;
                queue.push_back(v);
                if (queue.size() >= static_cast<std::size_t>(size)) {
                    full = true;
                    break;
                }
            }
        }
        sys.sets[u] = queue;  // discovery order, u first
    }
    if (dequeues) *dequeues += total;
    return sys;
}

}  // namespace detail

HittingSet greedy_hitting_set(const SetSystem& sys) {
    std::size_t x = sys.sets.empty() ? 0 : sys.sets.front().size();
    for (std::size_t i = 0; i < sys.sets.size(); ++i) {
        if (sys.sets[i].empty())
            throw Error("hitting set: set " + std::to_string(i) + " is empty");
        if (sys.sets[i].size() != x)
            throw Error("hitting set: sets must have equal size (set " + std::to_string(i) +
                        " has " + std::to_string(sys.sets[i].size()) + ", expected " +
                        std::to_string(x) + ")");
    }
    return detail::greedy_core(sys);
}

SetSystem closest_node_sets(const Graph& g, int size, std::uint64_t* dequeues) {
    SetSystem sys = detail::closest_node_sets_padded(g, size, dequeues);
    for (const auto& set : sys.sets) {
        if (set.size() < static_cast<std::size_t>(size)) {
            int smallest = *std::min_element(set.begin(), set.end());
            throw Error("component containing vertex " + std::to_string(smallest) + " has only " +
                        std::to_string(set.size()) + " vertices, fewer than the requested " +
                        std::to_string(size));
        }
    }
    return sys;
}

}  // namespace girth

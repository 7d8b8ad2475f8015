#include "limshape/kernels.hpp"

#include <algorithm>
#include <utility>

namespace limshape::kernels {

namespace {

void brute(const MonomialIdeal& I, ExponentVector& cur, std::size_t pos, std::int64_t left,
           std::int64_t& count) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        if (!I.contains(cur)) ++count;
        return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
        cur[pos] = e;
        brute(I, cur, pos + 1, left - e, count);
    }
}

// Number of points in [0, r] not covered by the intervals.
std::int64_t uncovered(std::vector<std::pair<std::int64_t, std::int64_t>>& iv, std::int64_t r) {
    std::sort(iv.begin(), iv.end());
    std::int64_t covered = 0, reach = -1;
    for (auto [lo, hi] : iv) {
        lo = std::max(lo, reach + 1);
        if (hi >= lo) {
            covered += hi - lo + 1;
            reach = hi;
        }
    }
    return r + 1 - covered;
}

// Walks prefixes of length k-2 (k = number of variables); `active` holds the
// generators whose prefix divides the current one.
std::int64_t count_prefix(const std::vector<const ExponentVector*>& active, std::size_t k,
                          ExponentVector& prefix, std::size_t pos, std::int64_t left) {
    if (pos + 2 == k) {
        std::vector<std::pair<std::int64_t, std::int64_t>> iv;
        iv.reserve(active.size());
        for (const auto* g : active) {
            std::int64_t lo = (*g)[k - 2], hi = left - (*g)[k - 1];
            if (hi >= lo) iv.emplace_back(lo, hi);
        }
        return uncovered(iv, left);
    }
    std::int64_t total = 0;
    std::vector<const ExponentVector*> next;
    for (std::int64_t e = 0; e <= left; ++e) {
        prefix[pos] = e;
        next.clear();
        for (const auto* g : active)
            if ((*g)[pos] <= e) next.push_back(g);
        total += count_prefix(next, k, prefix, pos + 1, left - e);
    }
    return total;
}

std::vector<const ExponentVector*> all_gens(const MonomialIdeal& I) {
    std::vector<const ExponentVector*> v;
    for (const auto& g : I.gens()) v.push_back(&g);
    return v;
}

}  // namespace

std::int64_t hf_reference(const MonomialIdeal& I, std::int64_t d) {
    if (d < 0) return 0;
    ExponentVector cur(I.vars(), 0);
    std::int64_t count = 0;
    brute(I, cur, 0, d, count);
    return count;
}

std::int64_t hf_serial(const MonomialIdeal& I, std::int64_t d) {
    if (d < 0) return 0;
    const std::size_t k = I.vars();
    if (k == 1) return I.contains(ExponentVector{d}) ? 0 : 1;
    ExponentVector prefix(k, 0);
    return count_prefix(all_gens(I), k, prefix, 0, d);
}

std::int64_t hf_parallel(const MonomialIdeal& I, std::int64_t d) {
    const std::size_t k = I.vars();
    if (d < 0) return 0;
    if (k < 3) return hf_serial(I, d);
    const auto gens = all_gens(I);
    std::int64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::int64_t e = 0; e <= d; ++e) {
        ExponentVector prefix(k, 0);
        prefix[0] = e;
        std::vector<const ExponentVector*> next;
        for (const auto* g : gens)
            if ((*g)[0] <= e) next.push_back(g);
        total += count_prefix(next, k, prefix, 1, d - e);
    }
    return total;
}

std::vector<std::int64_t> hf_range(const MonomialIdeal& I, std::int64_t dmax) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(std::max<std::int64_t>(dmax + 1, 0)));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t d = 0; d <= dmax; ++d) out[static_cast<std::size_t>(d)] = hf_serial(I, d);
    return out;
}

std::vector<std::int64_t> hf_range_serial(const MonomialIdeal& I, std::int64_t dmax) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 0; d <= dmax; ++d) out.push_back(hf_serial(I, d));
    return out;
}

}  // namespace limshape::kernels

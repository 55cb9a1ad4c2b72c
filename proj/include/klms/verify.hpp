#pragma once

#include <set>
#include <string>
#include <vector>

#include "klms/kl.hpp"
#include "klms/param.hpp"
#include "klms/reduce.hpp"
#include "klms/report.hpp"

namespace klms {

/// All subsets of {1..n-1} as generator sets, in a fixed order.
inline std::vector<GenSet> all_gen_sets(int n) {
    std::vector<GenSet> out;
    const int bits = n - 1;
    for (int mask = 0; mask < (1 << bits); ++mask) {
        std::set<int> m;
        for (int i = 0; i < bits; ++i)
            if (mask & (1 << i)) m.insert(i + 1);
        out.push_back(GenSet(n, std::move(m)));
    }
    return out;
}

/// All multisegments with 1..max_segments segments inside [lo, hi],
/// deduplicated up to translation (the minimal begin is normalized to lo).
inline std::vector<Multisegment> realization_corpus(int max_segments, int lo, int hi) {
    if (max_segments < 1 || lo > hi)
        throw precondition_error("corpus needs max_segments >= 1 and lo <= hi");
    std::vector<Segment> pool;
    for (int b = lo; b <= hi; ++b)
        for (int e = b; e <= hi; ++e) pool.emplace_back(b, e);
    std::vector<Multisegment> out;
    std::vector<Segment> stack;
    auto emit = [&]() {
        Multisegment m{std::vector<Segment>(stack)};
        if (m.segments().front().b == lo) out.push_back(std::move(m));
    };
    // Multisets as nondecreasing index sequences into the pool.
    auto rec = [&](auto&& self, size_t from) -> void {
        if (!stack.empty()) emit();
        if (static_cast<int>(stack.size()) == max_segments) return;
        for (size_t i = from; i < pool.size(); ++i) {
            stack.push_back(pool[i]);
            self(self, i);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Runs reduce_to_parabolic + interval_realization over the corpus; every
/// realization_error is a failure with its counterexample as the sample.
inline VerifyReport verify_realization(int max_segments, int lo, int hi,
                                       size_t cap = kDefaultEnumCap) {
    VerifyReport r;
    r.suite = "realization(max_segments=" + std::to_string(max_segments) + ", span=" +
              std::to_string(lo) + ".." + std::to_string(hi) + ")";
    for (const Multisegment& a : realization_corpus(max_segments, lo, hi)) {
        try {
            interval_realization(a, cap);
            r.count(true, "");
        } catch (const realization_error& e) {
            r.count(false, std::string(e.what()));
        } catch (const invariant_violation& e) {
            r.count(false, std::string(e.what()) + " (input " + a.to_string() + ")");
        }
    }
    return r;
}

/// Order-translation sweep over every (J1, J2) pair at rank n.
inline VerifyReport verify_param(int n, size_t cap = kDefaultEnumCap) {
    VerifyReport r;
    r.suite = "param(n=" + std::to_string(n) + ")";
    for (const GenSet& j1 : all_gen_sets(n))
        for (const GenSet& j2 : all_gen_sets(n))
            r.absorb(verify_order_translation(canonical_baseline(n, j1, j2, cap)));
    return r;
}

} // namespace klms

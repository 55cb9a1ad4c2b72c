#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "klms/kl.hpp"
#include "klms/ms_poset.hpp"
#include "klms/multisegment.hpp"
#include "klms/param.hpp"
#include "klms/symmetric_group.hpp"

namespace klms {

/// (J1(a), J2(a)) of a multisegment with r segments: J2 marks repetitions in
/// the sorted begins, J1 repetitions in the sorted ends, as subsets of
/// {1..r-1}.
inline std::pair<GenSet, GenSet> masks(const Multisegment& a) {
    if (a.empty()) throw precondition_error("masks of empty multisegment");
    const int r = static_cast<int>(a.size());
    std::vector<int> k = a.begins();
    std::vector<int> l = a.ends();
    std::set<int> j1, j2;
    for (int i = 1; i < r; ++i) {
        if (l[static_cast<size_t>(i - 1)] == l[static_cast<size_t>(i)]) j1.insert(i);
        if (k[static_cast<size_t>(i - 1)] == k[static_cast<size_t>(i)]) j2.insert(i);
    }
    return {GenSet(r, std::move(j1)), GenSet(r, std::move(j2))};
}

/// The unique w in S_r^{J1(a),J2(a)} with a = sum_j [k_j, l_{w(j)}].
inline Permutation recover_rep(const Multisegment& a) {
    if (a.empty()) throw precondition_error("recover_rep of empty multisegment");
    auto [j1, j2] = masks(a);
    Permutation w = detail::match_and_project(a, a.ends(), j1, j2);
    std::vector<int> k = a.begins();
    std::vector<int> l = a.ends();
    std::vector<Segment> rebuilt;
    rebuilt.reserve(a.size());
    for (int j = 1; j <= static_cast<int>(a.size()); ++j)
        rebuilt.emplace_back(k[static_cast<size_t>(j - 1)], l[static_cast<size_t>(w(j) - 1)]);
    if (Multisegment(std::move(rebuilt)) != a)
        throw invariant_violation("matching for " + a.to_string() + " failed to rebuild it");
    return w;
}

/// Parabolic type: min end >= max begin.
inline bool is_parabolic_type(const Multisegment& a) {
    return a.empty() || a.min_end() >= a.max_begin();
}

/// a^{(k)}: every segment ending exactly at k is end-decremented; segments
/// [k,k] are removed.
inline Multisegment truncate_end(const Multisegment& a, int k) {
    std::vector<Segment> out;
    out.reserve(a.size());
    for (const Segment& s : a.segments()) {
        if (s.e != k) out.push_back(s);
        else if (s.b < k) out.emplace_back(s.b, k - 1);
    }
    return Multisegment(std::move(out));
}

/// Applies truncate_end over the key sequence from the back: with
/// ksequence = (k_1, ..., k_r) this is t_{k_1} o ... o t_{k_r}.
inline Multisegment composite_truncation(Multisegment m, const std::vector<int>& ksequence) {
    for (size_t i = ksequence.size(); i-- > 0;) m = truncate_end(m, ksequence[i]);
    return m;
}

/// Everything the reduction of `a` to parabolic type produces.
struct ReductionWitness {
    Multisegment original;
    Multisegment parabolic;
    std::vector<Segment> chain;  // D^1, ..., D^s in construction order
    std::vector<int> ksequence;  // truncation points; composite_truncation maps
                                 // parabolic back to original
    Multisegment anchor;         // minimal element of the realized interval;
                                 // equals parabolic until a realization ran
    Permutation rep;             // recover_rep(parabolic)
    GenSet j1, j2;               // masks, preserved along the reduction
};

/// Reduces `a` to parabolic type: while some end is below some begin, the
/// run of ends starting at the minimal end m0 is located ([m0, l-1] all ends,
/// l not an end), the chain segment [m0+1, l] is recorded, and every segment
/// ending in [m0, l-1] is end-incremented. Masks are asserted invariant at
/// every step.
inline ReductionWitness reduce_to_parabolic(const Multisegment& a) {
    if (a.empty()) throw precondition_error("reduce_to_parabolic of empty multisegment");
    ReductionWitness wit;
    wit.original = a;
    auto [j1, j2] = masks(a);
    wit.j1 = j1;
    wit.j2 = j2;
    Multisegment cur = a;
    const int iteration_cap = a.max_begin() - a.min_end() + 2;
    int iterations = 0;
    while (!is_parabolic_type(cur)) {
        if (++iterations > iteration_cap)
            throw invariant_violation("reduction of " + a.to_string() + " exceeded " +
                                      std::to_string(iteration_cap) + " iterations");
        const int m0 = cur.min_end();
        const std::vector<int> cur_ends = cur.ends();
        std::set<int> ends(cur_ends.begin(), cur_ends.end());
        int l = m0 + 1;
        while (ends.count(l) > 0) ++l;
        wit.chain.emplace_back(m0 + 1, l);
        std::vector<Segment> next;
        next.reserve(cur.size());
        for (const Segment& s : cur.segments())
            next.push_back(s.e >= m0 && s.e <= l - 1 ? Segment(s.b, s.e + 1) : s);
        cur = Multisegment(std::move(next));
        auto [nj1, nj2] = masks(cur);
        if (nj1 != wit.j1 || nj2 != wit.j2)
            throw invariant_violation("masks changed while reducing " + a.to_string() +
                                      " at step " + std::to_string(iterations));
    }
    wit.parabolic = cur;
    wit.anchor = cur;
    wit.rep = recover_rep(cur);
    for (const Segment& d : wit.chain)
        for (int k = d.e; k >= d.b; --k) wit.ksequence.push_back(k);
    if (composite_truncation(wit.parabolic, wit.ksequence) != a)
        throw invariant_violation("composite truncation does not recover " + a.to_string());
    return wit;
}

/// S(a) realized as an upper interval of S(parabolic): the composite
/// truncation t restricted to D = {c in S(parabolic) : t(c) in S(a)} is
/// verified to be an order isomorphism onto S(a) with D = {c : c >= anchor}.
struct IntervalRealization {
    ReductionWitness witness;
    MsPoset original_poset;   // S(a)
    MsPoset parabolic_poset;  // S(parabolic)
    std::map<Multisegment, Multisegment> to_original;    // t restricted to D
    std::map<Multisegment, Multisegment> from_original;  // its inverse
};

inline IntervalRealization interval_realization(const Multisegment& a,
                                                size_t cap = kDefaultEnumCap) {
    IntervalRealization real;
    real.witness = reduce_to_parabolic(a);
    real.original_poset = MsPoset::enumerate(a, cap);
    real.parabolic_poset = MsPoset::enumerate(real.witness.parabolic, cap);
    const MsPoset& sp = real.parabolic_poset;
    const MsPoset& sa = real.original_poset;
    const std::map<int, int> target_weight = a.weight();

    std::vector<size_t> domain;
    for (size_t i = 0; i < sp.size(); ++i) {
        Multisegment t = composite_truncation(sp.element(i), real.witness.ksequence);
        if (t.weight() != target_weight || !sa.contains(t)) continue;
        domain.push_back(i);
        real.to_original.emplace(sp.element(i), t);
        if (!real.from_original.emplace(t, sp.element(i)).second)
            throw realization_error("t is not injective on D for a = " + a.to_string() +
                                    ": value " + t.to_string() + " is hit twice");
    }

    if (real.from_original.size() != sa.size()) {
        std::string missing;
        for (const Multisegment& m : sa.elements())
            if (real.from_original.find(m) == real.from_original.end()) {
                missing = m.to_string();
                break;
            }
        throw realization_error("t(D) misses " + missing + " of S(" + a.to_string() + ")");
    }

    // Unique minimum of D, then the upper-set property.
    size_t anchor_idx = sp.size();
    for (size_t i : domain) {
        bool minimal = true;
        for (size_t j : domain)
            if (j != i && sp.leq_by_index(j, i)) { minimal = false; break; }
        if (!minimal) continue;
        if (anchor_idx != sp.size())
            throw realization_error("D has two minimal elements for a = " + a.to_string() +
                                    ": " + sp.element(anchor_idx).to_string() + " and " +
                                    sp.element(i).to_string());
        anchor_idx = i;
    }
    if (anchor_idx == sp.size())
        throw realization_error("D is empty for a = " + a.to_string());
    real.witness.anchor = sp.element(anchor_idx);

    std::set<size_t> domain_set(domain.begin(), domain.end());
    for (size_t i = 0; i < sp.size(); ++i) {
        bool above = sp.leq_by_index(anchor_idx, i);
        if (above != (domain_set.count(i) > 0))
            throw realization_error("D is not the upper set of " +
                                    real.witness.anchor.to_string() + " for a = " +
                                    a.to_string() + ": differs at " +
                                    sp.element(i).to_string());
    }

    // Order isomorphism of t|D onto S(a).
    for (size_t i : domain)
        for (size_t j : domain) {
            bool up = sp.leq_by_index(i, j);
            bool down = sa.leq(real.to_original.at(sp.element(i)),
                               real.to_original.at(sp.element(j)));
            if (up != down)
                throw realization_error("t|D is not an order isomorphism for a = " +
                                        a.to_string() + ": pair " +
                                        sp.element(i).to_string() + ", " +
                                        sp.element(j).to_string());
        }
    return real;
}

/// P_{b,c} for arbitrary multisegments b <= c: S(c) is realized as an upper
/// interval in S(parabolic), b and c are pulled back along the embedding and
/// converted to double-coset representatives against the identity-shaped
/// baseline of the parabolic reduction, and the double-parabolic polynomial
/// of the pair is returned.
inline HalfExpPoly kl_multisegment(const Multisegment& b, const Multisegment& c,
                                   KLEngine& engine, size_t cap = kDefaultEnumCap) {
    if (b.empty() || c.empty())
        throw precondition_error("kl_multisegment requires nonempty multisegments");
    IntervalRealization real = interval_realization(c, cap);
    if (!real.original_poset.contains(b))
        throw precondition_error(b.to_string() + " <= " + c.to_string() +
                                 " fails in the multisegment order");
    const Multisegment& parabolic = real.witness.parabolic;
    std::vector<int> k = parabolic.begins();
    std::vector<int> l = parabolic.ends();
    std::vector<Segment> base;
    base.reserve(parabolic.size());
    for (size_t j = 0; j < parabolic.size(); ++j) base.emplace_back(k[j], l[j]);
    ParamContext ctx(real.witness.j1, real.witness.j2, Multisegment(std::move(base)), cap);
    Permutation v1 = phi_inverse(ctx, real.from_original.at(c));
    Permutation v2 = phi_inverse(ctx, real.from_original.at(b));
    return engine.double_parabolic(v1, v2, ctx.j1(), ctx.j2());
}

inline HalfExpPoly kl_multisegment(const Multisegment& b, const Multisegment& c,
                                   size_t cap = kDefaultEnumCap) {
    KLEngine engine(static_cast<int>(c.size()));
    return kl_multisegment(b, c, engine, cap);
}

} // namespace klms

#pragma once

#include <string>
#include <vector>

#include "klms/kl.hpp"
#include "klms/ms_poset.hpp"
#include "klms/multisegment.hpp"
#include "klms/report.hpp"
#include "klms/symmetric_group.hpp"

namespace klms {

/// A baseline multisegment D_1 <= ... <= D_n of parabolic type together with
/// the generator sets that encode its begin/end repetitions:
///   e(D_i) = e(D_{i+1})  iff  s_i in J1,
///   b(D_i) = b(D_{i+1})  iff  s_i in J2,
/// and b(D_n) <= e(D_1). The poset S(baseline) is enumerated once at
/// construction; afterwards the context is immutable.
class ParamContext {
public:
    ParamContext(GenSet j1, GenSet j2, Multisegment baseline,
                 size_t cap = kDefaultEnumCap)
        : j1_(std::move(j1)), j2_(std::move(j2)), baseline_(std::move(baseline)) {
        const int n = j1_.rank();
        if (j2_.rank() != n) throw precondition_error("J1 and J2 have different ranks");
        if (static_cast<int>(baseline_.size()) != n)
            throw precondition_error("baseline must have exactly " + std::to_string(n) +
                                     " segments, has " + std::to_string(baseline_.size()));
        const auto& segs = baseline_.segments();
        for (int i = 1; i < n; ++i) {
            const Segment& a = segs[static_cast<size_t>(i - 1)];
            const Segment& b = segs[static_cast<size_t>(i)];
            if (a.b > b.b || a.e > b.e)
                throw precondition_error("baseline segments are not nondecreasing in both "
                                         "begins and ends at position " + std::to_string(i));
            if ((a.e == b.e) != j1_.contains(i))
                throw precondition_error("end equality pattern disagrees with J1 at position " +
                                         std::to_string(i));
            if ((a.b == b.b) != j2_.contains(i))
                throw precondition_error("begin equality pattern disagrees with J2 at position " +
                                         std::to_string(i));
        }
        if (n > 0 && segs.back().b > segs.front().e)
            throw precondition_error("baseline is not of parabolic type: max begin " +
                                     std::to_string(segs.back().b) + " > min end " +
                                     std::to_string(segs.front().e));
        poset_ = MsPoset::enumerate(baseline_, cap);
    }

    int rank() const { return j1_.rank(); }
    const GenSet& j1() const { return j1_; }
    const GenSet& j2() const { return j2_; }
    const Multisegment& baseline() const { return baseline_; }
    const MsPoset& poset() const { return poset_; }

private:
    GenSet j1_, j2_;
    Multisegment baseline_;
    MsPoset poset_;
};

/// The canonical baseline: b(D_1) = 1 and e(D_1) = n, with begins repeating
/// exactly on J2 and ends exactly on J1. In the symmetric case this gives
/// D_i = [i, n+i-1].
inline ParamContext canonical_baseline(int n, const GenSet& J1, const GenSet& J2,
                                       size_t cap = kDefaultEnumCap) {
    if (n < 1) throw precondition_error("rank must be positive");
    std::vector<Segment> segs;
    segs.reserve(static_cast<size_t>(n));
    int b = 1, e = n;
    segs.emplace_back(b, e);
    for (int i = 1; i < n; ++i) {
        if (!J2.contains(i)) ++b;
        if (!J1.contains(i)) ++e;
        segs.emplace_back(b, e);
    }
    return ParamContext(J1, J2, Multisegment(std::move(segs)), cap);
}

/// Phi_{J1,J2}(w) = sum_i [b(D_i), e(D_{w(i)})] for w in S_n^{J1,J2}.
/// Membership of the image in S(baseline) is asserted at runtime rather
/// than assumed.
inline Multisegment phi(const ParamContext& ctx, const Permutation& w) {
    if (w.rank() != ctx.rank())
        throw precondition_error("rank mismatch: context is S_" + std::to_string(ctx.rank()) +
                                 ", got " + w.to_string());
    if (!is_min_double_coset_rep(w, ctx.j1(), ctx.j2()))
        throw precondition_error(w.to_string() +
                                 " is not a minimal double-coset representative for (J1,J2)=({" +
                                 ctx.j1().to_string() + "},{" + ctx.j2().to_string() + "})");
    const auto& segs = ctx.baseline().segments();
    std::vector<Segment> out;
    out.reserve(segs.size());
    for (int i = 1; i <= ctx.rank(); ++i)
        out.emplace_back(segs[static_cast<size_t>(i - 1)].b,
                         segs[static_cast<size_t>(w(i) - 1)].e);
    Multisegment result(std::move(out));
    if (!ctx.poset().contains(result))
        throw invariant_violation("phi(" + w.to_string() + ") = " + result.to_string() +
                                  " is not in S(" + ctx.baseline().to_string() +
                                  "); this contradicts the parametrization theorem");
    return result;
}

namespace detail {

/// Matches the segments of `b` against sorted begins/ends, then projects the
/// matching to the minimal representative of its (J1, J2) double coset by
/// greedy descent removal.
inline Permutation match_and_project(const Multisegment& b, const std::vector<int>& sorted_ends,
                                     const GenSet& J1, const GenSet& J2) {
    const int n = static_cast<int>(b.size());
    std::vector<int> image(static_cast<size_t>(n), 0);
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    const auto& segs = b.segments();  // sorted by (begin, end): begins match k_j in order
    for (int j = 0; j < n; ++j) {
        int pick = 0;
        for (int m = 1; m <= n; ++m)
            if (!used[static_cast<size_t>(m)] &&
                sorted_ends[static_cast<size_t>(m - 1)] == segs[static_cast<size_t>(j)].e) {
                pick = m;
                break;
            }
        if (pick == 0)
            throw invariant_violation("no end matches segment " +
                                      segs[static_cast<size_t>(j)].to_string() + " of " +
                                      b.to_string());
        used[static_cast<size_t>(pick)] = 1;
        image[static_cast<size_t>(j)] = pick;
    }
    Permutation w{std::vector<int>(image)};
    for (bool moved = true; moved;) {
        moved = false;
        Permutation inv = w.inverse();
        for (int i : J1.members())
            if (inv(i) > inv(i + 1)) {
                w = Permutation::simple(w.rank(), i) * w;
                moved = true;
                break;
            }
        if (moved) continue;
        for (int i : J2.members())
            if (w(i) > w(i + 1)) {
                w = w * Permutation::simple(w.rank(), i);
                moved = true;
                break;
            }
    }
    return w;
}

} // namespace detail

/// Inverse of phi: the unique w in S_n^{J1,J2} with phi(ctx, w) = b.
inline Permutation phi_inverse(const ParamContext& ctx, const Multisegment& b) {
    if (!ctx.poset().contains(b))
        throw precondition_error(b.to_string() + " is not in S(" +
                                 ctx.baseline().to_string() + ")");
    Permutation w =
        detail::match_and_project(b, ctx.baseline().ends(), ctx.j1(), ctx.j2());
    if (phi(ctx, w) != b)
        throw invariant_violation("phi_inverse(" + b.to_string() + ") = " + w.to_string() +
                                  " does not invert phi");
    return w;
}

/// Exhaustively checks that Phi_{J1,J2} is a bijection onto S(baseline),
/// that phi_inverse inverts it, and that it translates inverse Bruhat order
/// to the multisegment order: w <= w'  iff  phi(w') <= phi(w).
inline VerifyReport verify_order_translation(const ParamContext& ctx) {
    VerifyReport r;
    r.suite = "order-translation(n=" + std::to_string(ctx.rank()) + ",J1={" +
              ctx.j1().to_string() + "},J2={" + ctx.j2().to_string() + "})";
    std::vector<Permutation> reps = min_double_coset_reps(ctx.j1(), ctx.j2());
    r.count(reps.size() == ctx.poset().size(),
            "|S_n^{J1,J2}| = " + std::to_string(reps.size()) + " but |S(baseline)| = " +
                std::to_string(ctx.poset().size()));
    std::vector<Multisegment> images;
    images.reserve(reps.size());
    for (const Permutation& w : reps) {
        Multisegment m = phi(ctx, w);
        images.push_back(m);
        r.count(phi_inverse(ctx, m) == w, "phi_inverse(phi(w)) != w at w=" + w.to_string());
    }
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j) {
            bool perm_leq = bruhat_leq(reps[i], reps[j]);
            bool ms_geq = ctx.poset().leq(images[j], images[i]);
            r.count(perm_leq == ms_geq, "order translation fails at w=" + reps[i].to_string() +
                                            ", w'=" + reps[j].to_string());
        }
    return r;
}

/// P_{b,c} through the parametrization: pulls b and c back to double-coset
/// representatives (the smaller multisegment maps to the larger permutation)
/// and evaluates the double-parabolic polynomial.
inline HalfExpPoly kl_via_param(const ParamContext& ctx, KLEngine& engine,
                                const Multisegment& b, const Multisegment& c) {
    if (engine.rank() != ctx.rank())
        throw precondition_error("engine rank " + std::to_string(engine.rank()) +
                                 " does not match context rank " + std::to_string(ctx.rank()));
    if (!ctx.poset().contains(b) || !ctx.poset().contains(c))
        throw precondition_error("both multisegments must lie in S(" +
                                 ctx.baseline().to_string() + ")");
    if (!ctx.poset().leq(b, c))
        throw precondition_error(b.to_string() + " <= " + c.to_string() +
                                 " fails in the multisegment order");
    Permutation v1 = phi_inverse(ctx, c);
    Permutation v2 = phi_inverse(ctx, b);
    return engine.double_parabolic(v1, v2, ctx.j1(), ctx.j2());
}

inline HalfExpPoly kl_via_param(const ParamContext& ctx, const Multisegment& b,
                                const Multisegment& c) {
    KLEngine engine(ctx.rank());
    return kl_via_param(ctx, engine, b, c);
}

} // namespace klms

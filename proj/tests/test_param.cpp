#include "doctest.h"
#include "klms/param.hpp"
#include "klms/verify.hpp"

using klms::GenSet;
using klms::HalfExpPoly;
using klms::KLEngine;
using klms::Multisegment;
using klms::ParamContext;
using klms::Permutation;

namespace {

Multisegment ms(const std::string& s) { return Multisegment::parse(s); }
Permutation perm(const std::string& s) { return Permutation::parse(s); }

} // namespace

TEST_CASE("canonical baseline shapes") {
    ParamContext c2 = klms::canonical_baseline(2, GenSet::empty(2), GenSet::empty(2));
    CHECK(c2.baseline() == ms("[1,2]+[2,3]"));

    // Symmetric case: D_i = [i, n+i-1].
    for (int n : {2, 3, 4}) {
        ParamContext c = klms::canonical_baseline(n, GenSet::empty(n), GenSet::empty(n));
        const auto& segs = c.baseline().segments();
        for (int i = 1; i <= n; ++i) {
            CHECK(segs[static_cast<size_t>(i - 1)].b == i);
            CHECK(segs[static_cast<size_t>(i - 1)].e == n + i - 1);
        }
    }

    ParamContext c4 = klms::canonical_baseline(4, GenSet::empty(4), GenSet(4, {1, 3}));
    CHECK(c4.baseline().begins() == std::vector<int>{1, 1, 2, 2});
    auto ends = c4.baseline().ends();
    for (size_t i = 1; i < ends.size(); ++i) CHECK(ends[i - 1] < ends[i]);
}

TEST_CASE("user-supplied baselines are validated") {
    GenSet none = GenSet::empty(4);
    // The running J2 = {s1, s3} example baseline.
    CHECK_NOTHROW(ParamContext(none, GenSet(4, {1, 3}), ms("[1,3]+[1,4]+[2,5]+[2,6]")));
    // Equality pattern off by one generator.
    CHECK_THROWS_AS(ParamContext(none, GenSet(4, {1}), ms("[1,3]+[1,4]+[2,5]+[2,6]")),
                    klms::precondition_error);
    // Not of parabolic type: max begin 5 > min end 2.
    CHECK_THROWS_AS(ParamContext(GenSet::empty(2), GenSet::empty(2), ms("[1,2]+[5,6]")),
                    klms::precondition_error);
    // Ends not nondecreasing alongside begins.
    CHECK_THROWS_AS(ParamContext(GenSet::empty(2), GenSet::empty(2), ms("[1,5]+[2,4]")),
                    klms::precondition_error);
}

TEST_CASE("phi: identity maps to the baseline") {
    ParamContext ctx = klms::canonical_baseline(3, GenSet::empty(3), GenSet::empty(3));
    CHECK(klms::phi(ctx, Permutation::identity(3)) == ctx.baseline());
}

TEST_CASE("phi: the one-sided worked example") {
    // n=4, J2={s1,s3}, baseline [1,3]+[1,4]+[2,5]+[2,6], w = s1 s2 = (2,3,1,4).
    ParamContext ctx(GenSet::empty(4), GenSet(4, {1, 3}), ms("[1,3]+[1,4]+[2,5]+[2,6]"));
    Permutation w = Permutation::simple(4, 1) * Permutation::simple(4, 2);
    CHECK(w == perm("2314"));
    Multisegment image = klms::phi(ctx, w);
    CHECK(image == ms("[1,4]+[1,5]+[2,3]+[2,6]"));
    CHECK(klms::phi_inverse(ctx, image) == w);
}

TEST_CASE("phi: symmetric n=2") {
    ParamContext ctx = klms::canonical_baseline(2, GenSet::empty(2), GenSet::empty(2));
    CHECK(klms::phi(ctx, perm("21")) == ms("[1,3]+[2,2]"));
    CHECK(klms::phi_inverse(ctx, ms("[1,3]+[2,2]")) == perm("21"));
    CHECK(klms::phi_inverse(ctx, ctx.baseline()) == Permutation::identity(2));
}

TEST_CASE("phi rejects invalid representatives and foreign multisegments") {
    ParamContext ctx = klms::canonical_baseline(3, GenSet(3, {1}), GenSet::empty(3));
    CHECK_THROWS_AS(klms::phi(ctx, perm("213")), klms::precondition_error);
    CHECK_THROWS_AS(klms::phi_inverse(ctx, ms("[9,9]")), klms::precondition_error);
}

TEST_CASE("round-trip and order translation, all (J1,J2), n <= 3") {
    for (int n : {2, 3}) {
        for (const GenSet& j1 : klms::all_gen_sets(n)) {
            for (const GenSet& j2 : klms::all_gen_sets(n)) {
                ParamContext ctx = klms::canonical_baseline(n, j1, j2);
                auto reps = klms::min_double_coset_reps(j1, j2);
                CHECK(reps.size() == ctx.poset().size());
                for (const Permutation& w : reps)
                    CHECK(klms::phi_inverse(ctx, klms::phi(ctx, w)) == w);
                auto report = klms::verify_order_translation(ctx);
                CHECK(report.failures == 0);
            }
        }
    }
}

TEST_CASE("one-sided poset sizes follow n!/|S_J|") {
    for (const GenSet& j : klms::all_gen_sets(4)) {
        ParamContext ctx = klms::canonical_baseline(4, GenSet::empty(4), j);
        CHECK(ctx.poset().size() * klms::subgroup_elements(j).size() == 24);
    }
}

TEST_CASE("order translation: the two-element symmetric case") {
    ParamContext ctx = klms::canonical_baseline(2, GenSet::empty(2), GenSet::empty(2));
    CHECK(klms::bruhat_less(Permutation::identity(2), perm("21")));
    CHECK(ctx.poset().leq(klms::phi(ctx, perm("21")), klms::phi(ctx, Permutation::identity(2))));
    auto report = klms::verify_order_translation(ctx);
    CHECK(report.failures == 0);
}

TEST_CASE("kl_via_param") {
    KLEngine e3(3);
    ParamContext sym3 = klms::canonical_baseline(3, GenSet::empty(3), GenSet::empty(3));
    for (const Multisegment& b : sym3.poset().elements())
        for (const Multisegment& c : sym3.poset().elements()) {
            if (!sym3.poset().leq(b, c)) continue;
            CHECK(klms::kl_via_param(sym3, e3, b, c) == HalfExpPoly::one());
        }
    Multisegment root = sym3.baseline();
    CHECK(klms::kl_via_param(sym3, e3, root, root) == HalfExpPoly::one());
    CHECK_THROWS_AS(klms::kl_via_param(sym3, e3, root, sym3.poset().minimum()),
                    klms::precondition_error);
}

TEST_CASE("kl_via_param agrees with kl_poly through the symmetric phi on S_4") {
    KLEngine e4(4);
    ParamContext sym4 = klms::canonical_baseline(4, GenSet::empty(4), GenSet::empty(4));
    for (const Permutation& w : klms::all_permutations(4))
        for (const Permutation& v : klms::all_permutations(4)) {
            if (!klms::bruhat_leq(w, v)) continue;
            // w <= v translates to phi(v) <= phi(w).
            CHECK(klms::kl_via_param(sym4, e4, klms::phi(sym4, v), klms::phi(sym4, w)) ==
                  e4.kl(w, v));
        }
}

// Acceptance suite: runs the eight release criteria end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "klms/klms.hpp"

using namespace klms;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    if (!detail.empty() && detail.rfind("FAIL:", 0) == 0) ok = false;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    char secs[32];
    std::snprintf(secs, sizeof(secs), "%.1f", static_cast<double>(ms) / 1000.0);
    std::cout << "[" << (ok ? "PASS" : "FAIL") << "] " << name << " (" << secs << "s)"
              << (detail.empty() ? "" : " -- ") << detail << std::endl;
    if (!ok) ++g_failures;
}

Permutation perm(const std::string& s) { return Permutation::parse(s); }
Multisegment ms(const std::string& s) { return Multisegment::parse(s); }

std::string run_cli(const std::string& args) {
    std::string cmd = std::string(KLMS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return "<popen failed>";
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    pclose(pipe);
    return out;
}

} // namespace

int main() {
    const HalfExpPoly one = HalfExpPoly::one();
    const HalfExpPoly one_plus_q = HalfExpPoly::one() + HalfExpPoly::q();

    criterion("1. relations (1)-(5) exhaustively for n = 2..5", [&] {
        long long checks = 0;
        for (int n = 2; n <= 5; ++n) {
            KLEngine engine(n);
            VerifyReport r = engine.verify_relations();
            checks += r.checks;
            if (r.failures != 0) return "FAIL: " + r.summary();
        }
        return std::to_string(checks) + " checks, 0 failures";
    });

    criterion("2. KL sanity on S_4 (bounds, symmetry, frozen values)", [&] {
        KLEngine left(4);
        KLEngine right(4, KLEngine::Side::right);
        long long pairs = 0;
        for (const Permutation& x : all_permutations(4)) {
            for (const Permutation& y : all_permutations(4)) {
                if (!bruhat_leq(x, y)) continue;
                const HalfExpPoly& p = left.kl(x, y);
                if (p != right.kl(x, y))
                    return "FAIL: left/right recursions disagree at " + x.to_string() + "," +
                           y.to_string();
                if (p != left.kl(x.inverse(), y.inverse()))
                    return "FAIL: inverse symmetry fails at " + x.to_string() + "," +
                           y.to_string();
                if (!p.is_integral()) return "FAIL: non-integral exponents at " + y.to_string();
                if (p.coeff(0) != BigInt(1))
                    return "FAIL: constant term != 1 at " + x.to_string() + "," + y.to_string();
                for (const auto& [e, c] : p.terms())
                    if (!(c > BigInt(0)))
                        return "FAIL: negative coefficient at " + x.to_string() + "," +
                               y.to_string();
                if (x != y && p.degree_numerator() > y.length() - x.length() - 1)
                    return "FAIL: degree bound broken at " + x.to_string() + "," + y.to_string();
                ++pairs;
            }
        }
        Permutation e4 = Permutation::identity(4);
        if (left.kl(e4, perm("3412")) != one_plus_q) return std::string("FAIL: P_{e,3412} != 1+q");
        if (left.kl(e4, perm("4231")) != one_plus_q) return std::string("FAIL: P_{e,4231} != 1+q");
        return std::to_string(pairs) + " comparable pairs checked";
    });

    criterion("3. parametrization bijections and order translation, n <= 4", [&] {
        long long checks = 0;
        for (int n = 2; n <= 4; ++n) {
            VerifyReport r = verify_param(n);
            checks += r.checks;
            if (r.failures != 0) return "FAIL: " + r.summary();
        }
        return std::to_string(checks) + " checks, 0 failures";
    });

    criterion("4. parabolic KL consistency, n <= 4", [&] {
        long long checks = 0;
        for (int n = 2; n <= 4; ++n) {
            KLEngine engine(n);
            for (const GenSet& j : all_gen_sets(n)) {
                Permutation wj = longest_element(j);
                auto reps = min_coset_reps(j);
                for (const Permutation& v1 : reps)
                    for (const Permutation& v2 : reps) {
                        if (engine.parabolic(v1, v2, j) != engine.kl(v1 * wj, v2 * wj))
                            return "FAIL: parabolic path mismatch at n=" + std::to_string(n);
                        ++checks;
                    }
                auto dreps = min_double_coset_reps(j, GenSet::empty(n));
                for (const Permutation& v1 : dreps)
                    for (const Permutation& v2 : dreps) {
                        if (!bruhat_leq(v1, v2)) continue;
                        if (engine.double_parabolic(v1, v2, j, GenSet::empty(n)) !=
                            engine.kl(wj * v1, wj * v2))
                            return "FAIL: J2=empty left analogue mismatch at n=" +
                                   std::to_string(n) + ", J={" + j.to_string() + "}";
                        ++checks;
                    }
            }
        }
        return std::to_string(checks) + " identities checked";
    });

    criterion("5. Grassmannian chains S(k[0,1]+(n-k)[1,2]), 1 <= k < n <= 6", [&] {
        std::string kl_exceptions;
        long long chain_checks = 0, kl_checks = 0;
        for (int n = 2; n <= 6; ++n) {
            KLEngine engine(n);
            for (int k = 1; k < n; ++k) {
                std::vector<Segment> segs;
                for (int i = 0; i < k; ++i) segs.emplace_back(0, 1);
                for (int i = 0; i < n - k; ++i) segs.emplace_back(1, 2);
                Multisegment a{std::move(segs)};
                MsPoset poset = MsPoset::enumerate(a);
                size_t expected = static_cast<size_t>(std::min(k, n - k) + 1);
                if (poset.size() != expected)
                    return "FAIL: |S(a)| = " + std::to_string(poset.size()) + " != " +
                           std::to_string(expected) + " at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k);
                for (const Multisegment& x : poset.elements())
                    for (const Multisegment& y : poset.elements())
                        if (x != y && !poset.leq(x, y) && !poset.leq(y, x))
                            return "FAIL: not a chain at n=" + std::to_string(n) +
                                   ", k=" + std::to_string(k);
                ++chain_checks;
                for (const Multisegment& b : poset.elements())
                    for (const Multisegment& c : poset.elements()) {
                        if (!poset.leq(b, c)) continue;
                        HalfExpPoly p = kl_multisegment(b, c, engine);
                        ++kl_checks;
                        if (p != one && kl_exceptions.size() < 2000)
                            kl_exceptions += " [n=" + std::to_string(n) +
                                             ",k=" + std::to_string(k) + ": P(" + b.to_string() +
                                             ", " + c.to_string() + ") = " + p.to_text() + "]";
                    }
            }
        }
        if (!kl_exceptions.empty())
            return "FAIL: " + std::to_string(chain_checks) +
                   " chains have the right shape, but KL values != 1:" + kl_exceptions +
                   " (the computed values are the classical Grassmannian IC stalks, "
                   "cross-checked by criterion 1; see README, Known-red acceptance criterion)";
        return std::to_string(chain_checks) + " chains, " + std::to_string(kl_checks) +
               " KL values, all 1";
    });

    criterion("6. reduction + interval realization over the [0,6] corpus", [&] {
        VerifyReport r = verify_realization(4, 0, 6);
        if (r.failures != 0) return "FAIL: " + r.summary();
        return std::to_string(r.checks) + " multisegments realized, 0 failures";
    });

    criterion("7. decomposition summands reproduce relation (5) on S_4", [&] {
        KLEngine e3(3);
        auto triples = e3.decomposition_summands(perm("213"), perm("321"), 2);
        if (triples.size() != 1 || triples[0].z != perm("213") ||
            triples[0].multiplicity != 1 || triples[0].shift != 2)
            return std::string("FAIL: S_3 instance (v=321, w=213, k1=2) is wrong");

        KLEngine engine(4);
        long long instances = 0;
        for (const Permutation& v : all_permutations(4))
            for (const Permutation& w : all_permutations(4))
                for (int k1 = 2; k1 <= 4; ++k1) {
                    Permutation s = Permutation::simple(4, k1 - 1);
                    Permutation sv = s * v, sw = s * w;
                    if (sv.length() >= v.length() || sw.length() >= w.length()) continue;
                    if (!bruhat_less(w, v) || !bruhat_less(w, sv)) continue;
                    HalfExpPoly residual =
                        engine.kl(w, v) - engine.kl(sw, sv) - HalfExpPoly::q() * engine.kl(w, sv);
                    for (const SummandTriple& t : engine.decomposition_summands(w, v, k1))
                        residual +=
                            HalfExpPoly::monomial(t.shift, t.multiplicity) * engine.kl(w, t.z);
                    if (!residual.is_zero())
                        return "FAIL: nonzero residual at w=" + w.to_string() +
                               ", v=" + v.to_string() + ", k1=" + std::to_string(k1);
                    ++instances;
                }
        return std::to_string(instances) + " instances, 0 residuals";
    });

    criterion("8. determinism of repeated CLI invocations", [&] {
        for (const char* cmd :
             {"kl --n 4 --x 1234 --y 4231", "poset \"2*[0,1]+2*[1,2]\"",
              "reduce \"[0,0]+[2,2]\"", "verify --suite param --n 3",
              "verify --suite realization --max-segments 3 --span 0..4"}) {
            std::string a = run_cli(cmd);
            std::string b = run_cli(cmd);
            if (a != b || a.empty())
                return "FAIL: output differs across runs of '" + std::string(cmd) + "'";
        }
        return std::string("5 commands byte-stable");
    });

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criterion(s) failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "klms/half_exp_poly.hpp"
#include "klms/report.hpp"
#include "klms/symmetric_group.hpp"

namespace klms {

/// One non-principal summand of the decomposition: the element z, the local
/// multiplicity mu(z, s v) and the shift l(v) - l(z).
struct SummandTriple {
    Permutation z;
    long long multiplicity = 0;
    long long shift = 0;

    bool operator==(const SummandTriple& o) const {
        return z == o.z && multiplicity == o.multiplicity && shift == o.shift;
    }
};

/// Memoized Kazhdan-Lusztig polynomial engine for a fixed S_n.
///
/// P_{x,y} is computed by the defining recursion: P_{x,x} = 1, P_{x,y} = 0
/// unless x <= y, and for a descent s of y either the shift P_{sx,y}
/// (ascent of x), the incomparable case P_{sx,sy}, or the full recursion
///   P_{sx,sy} + q P_{x,sy} - sum_{x <= z < sy, sz < z}
///       q^{(l(y)-l(z))/2} mu(z,sy) P_{x,z}.
/// The descent is taken on the left by default (smallest index); the right
/// and largest-index variants exist so tests can cross-check that the
/// choice does not matter.
///
/// An engine is single-writer: computations mutate the memo table. Share
/// one engine across concurrent readers only after all values of interest
/// have been computed.
class KLEngine {
public:
    enum class Side { left, right };
    enum class Pick { smallest, largest };

    static constexpr int kMaxRank = 8;

    explicit KLEngine(int n, Side side = Side::left, Pick pick = Pick::smallest)
        : n_(n), side_(side), pick_(pick) {
        if (n < 1 || n > kMaxRank)
            throw precondition_error("KL engine rank must be in 1.." +
                                     std::to_string(kMaxRank) + ", got " + std::to_string(n));
        elements_ = all_permutations(n);
        const int max_len = n * (n - 1) / 2;
        by_length_.resize(static_cast<size_t>(max_len) + 1);
        for (size_t i = 0; i < elements_.size(); ++i) {
            by_length_[static_cast<size_t>(elements_[i].length())].push_back(i);
            code_.emplace(encode(elements_[i]), static_cast<uint64_t>(i));
        }
        // All-pairs Bruhat matrix; affordable through S_6, on demand beyond.
        if (n <= 6) {
            const size_t m = elements_.size();
            bruhat_.assign(m, std::vector<char>(m, 0));
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j)
                    bruhat_[i][j] = bruhat_leq(elements_[i], elements_[j]) ? 1 : 0;
        }
    }

    int rank() const { return n_; }

    /// P_{x,y}(q).
    const HalfExpPoly& kl(const Permutation& x, const Permutation& y) {
        check_rank(x);
        check_rank(y);
        uint64_t k = pair_key(x, y);
        auto it = memo_.find(k);
        if (it != memo_.end()) return it->second;
        HalfExpPoly p = compute(x, y);
        return memo_.emplace(k, std::move(p)).first->second;
    }

    /// mu(x,y): coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y};
    /// zero when x is not strictly below y or the length gap is even.
    BigInt mu(const Permutation& x, const Permutation& y) {
        check_rank(x);
        check_rank(y);
        if (x == y || !leq(x, y)) return BigInt{};
        long long gap = y.length() - x.length();
        if (gap % 2 == 0) return BigInt{};
        return kl(x, y).coeff(gap - 1);
    }

    /// Parabolic P^J_{v1,v2}(q) = P_{v1 wJ, v2 wJ}(q) for minimal coset
    /// representatives v1, v2 in S_n^J.
    HalfExpPoly parabolic(const Permutation& v1, const Permutation& v2, const GenSet& J) {
        for (const Permutation* v : {&v1, &v2}) {
            check_rank(*v);
            for (int i : J.members())
                if ((*v)(i) > (*v)(i + 1))
                    throw precondition_error(v->to_string() +
                                             " is not a minimal coset representative for J={" +
                                             J.to_string() + "}");
        }
        Permutation wj = longest_element(J);
        return kl(v1 * wj, v2 * wj);
    }

    /// Double-parabolic P^{J1,J2}_{v1,v2}(q) = P_{w1,w2}(q), where w_i is the
    /// longest element of S_{J1} v_i S_{J2}. Requires v1 <= v2.
    HalfExpPoly double_parabolic(const Permutation& v1, const Permutation& v2,
                                 const GenSet& J1, const GenSet& J2) {
        check_rank(v1);
        check_rank(v2);
        for (const Permutation* v : {&v1, &v2})
            if (!is_min_double_coset_rep(*v, J1, J2))
                throw precondition_error(v->to_string() +
                                         " is not a minimal double-coset representative");
        if (!leq(v1, v2))
            throw precondition_error(v1.to_string() + " <= " + v2.to_string() +
                                     " fails in Bruhat order");
        Permutation w1 = max_double_coset_element(v1, J1, J2);
        Permutation w2 = max_double_coset_element(v2, J1, J2);
        return kl(w1, w2);
    }

    /// The triples (z, mu(z, s v), l(v) - l(z)) over R(w,v)_{k1} with
    /// nonzero mu, where s = s_{k1-1}. Preconditions: sv < v, sw < w,
    /// w < v and w < sv; each failing clause is named.
    std::vector<SummandTriple> decomposition_summands(const Permutation& w,
                                                      const Permutation& v, int k1) {
        check_rank(w);
        check_rank(v);
        if (k1 < 2 || k1 > n_)
            throw precondition_error("k1 must be in 2.." + std::to_string(n_) + ", got " +
                                     std::to_string(k1));
        Permutation s = Permutation::simple(n_, k1 - 1);
        Permutation sv = s * v;
        Permutation sw = s * w;
        if (sv.length() >= v.length())
            throw precondition_error("clause sv < v fails: s_" + std::to_string(k1 - 1) +
                                     " is not a left descent of v=" + v.to_string());
        if (sw.length() >= w.length())
            throw precondition_error("clause sw < w fails: s_" + std::to_string(k1 - 1) +
                                     " is not a left descent of w=" + w.to_string());
        if (!(w != v && leq(w, v)))
            throw precondition_error("clause w < v fails for w=" + w.to_string() +
                                     ", v=" + v.to_string());
        if (!(w != sv && leq(w, sv)))
            throw precondition_error("clause w < sv fails for w=" + w.to_string() +
                                     ", sv=" + sv.to_string());
        std::vector<SummandTriple> out;
        const int lv = v.length();
        for (int len = w.length(); len < sv.length(); ++len) {
            for (size_t idx : by_length_[static_cast<size_t>(len)]) {
                const Permutation& z = elements_[idx];
                Permutation sz = s * z;
                if (sz.length() >= z.length()) continue;
                if (!leq(w, z) || !leq(z, sv)) continue;
                BigInt m = mu(z, sv);
                if (m.is_zero()) continue;
                out.push_back({z, m.to_int64(), lv - z.length()});
            }
        }
        return out;
    }

    /// Checks relations (1)-(5) for every applicable (x, y, s) triple in S_n.
    VerifyReport verify_relations() {
        VerifyReport r;
        r.suite = "relations(n=" + std::to_string(n_) + ")";
        for (const Permutation& x : elements_)
            r.count(kl(x, x) == HalfExpPoly::one(), "(1) P_{x,x} != 1 at x=" + x.to_string());
        for (const Permutation& y : elements_) {
            for (const Permutation& x : elements_) {
                if (x == y || !leq(x, y)) continue;
                for (int i = 1; i < n_; ++i) {
                    Permutation s = Permutation::simple(n_, i);
                    Permutation sy = s * y;
                    Permutation ys = y * s;
                    std::string at = " at x=" + x.to_string() + " y=" + y.to_string() +
                                     " s=" + std::to_string(i);
                    if (sy.length() < y.length()) {
                        Permutation sx = s * x;
                        if (sx.length() > x.length()) {
                            r.count(kl(x, y) == kl(sx, y), "(2) P_{x,y} != P_{sx,y}" + at);
                        } else if (!leq(x, sy)) {
                            r.count(kl(x, y) == kl(sx, sy), "(4) P_{x,y} != P_{sx,sy}" + at);
                        } else {
                            HalfExpPoly rhs = kl(sx, sy) + HalfExpPoly::q() * kl(x, sy);
                            rhs -= mu_sum(x, y, sy, s);
                            r.count(kl(x, y) == rhs, "(5) recursion mismatch" + at);
                        }
                    }
                    if (ys.length() < y.length()) {
                        Permutation xs = x * s;
                        if (xs.length() > x.length())
                            r.count(kl(x, y) == kl(xs, y), "(3) P_{x,y} != P_{xs,y}" + at);
                    }
                }
            }
        }
        return r;
    }

private:
    int n_;
    Side side_;
    Pick pick_;
    std::vector<Permutation> elements_;
    std::vector<std::vector<size_t>> by_length_;
    std::unordered_map<uint64_t, uint64_t> code_;
    std::unordered_map<uint64_t, HalfExpPoly> memo_;
    std::vector<std::vector<char>> bruhat_;

    bool leq(const Permutation& x, const Permutation& y) const {
        if (bruhat_.empty()) return bruhat_leq(x, y);
        return bruhat_[code_.at(encode(x))][code_.at(encode(y))] != 0;
    }

    void check_rank(const Permutation& w) const {
        if (w.rank() != n_)
            throw precondition_error("rank mismatch: engine is S_" + std::to_string(n_) +
                                     ", got " + w.to_string());
    }

    static uint64_t encode(const Permutation& w) {
        uint64_t k = 0;
        for (int v : w.images()) k = k * 9 + static_cast<uint64_t>(v);
        return k;
    }

    uint64_t pair_key(const Permutation& x, const Permutation& y) const {
        return code_.at(encode(x)) * static_cast<uint64_t>(elements_.size()) +
               code_.at(encode(y));
    }

    // The correction sum of relation (5):
    //   sum_{x <= z < sy, sz < z} q^{(l(y)-l(z))/2} mu(z, sy) P_{x,z}.
    HalfExpPoly mu_sum(const Permutation& x, const Permutation& y, const Permutation& sy,
                       const Permutation& s) {
        HalfExpPoly total;
        const int ly = y.length();
        for (int len = x.length(); len < sy.length(); ++len) {
            for (size_t idx : by_length_[static_cast<size_t>(len)]) {
                const Permutation& z = elements_[idx];
                if ((s * z).length() >= z.length()) continue;
                if (!leq(x, z) || !leq(z, sy)) continue;
                BigInt m = mu(z, sy);
                if (m.is_zero()) continue;
                total += HalfExpPoly::monomial(ly - z.length(), m) * kl(x, z);
            }
        }
        return total;
    }

    HalfExpPoly compute(const Permutation& x, const Permutation& y) {
        if (x == y) return HalfExpPoly::one();
        if (!leq(x, y)) return HalfExpPoly::zero();
        if (side_ == Side::left) {
            int i = pick_descent(left_descents(y));
            Permutation s = Permutation::simple(n_, i);
            Permutation sx = s * x;
            if (sx.length() > x.length()) return kl(sx, y);  // relation (2)
            Permutation sy = s * y;
            if (!leq(x, sy)) return kl(sx, sy);       // relation (4)
            return kl(sx, sy) + HalfExpPoly::q() * kl(x, sy) - mu_sum(x, y, sy, s);
        }
        int i = pick_descent(right_descents(y));
        Permutation s = Permutation::simple(n_, i);
        Permutation xs = x * s;
        if (xs.length() > x.length()) return kl(xs, y);      // relation (3)
        Permutation ys = y * s;
        if (!leq(x, ys)) return kl(xs, ys);
        return kl(xs, ys) + HalfExpPoly::q() * kl(x, ys) - mu_sum_right(x, y, ys, s);
    }

    HalfExpPoly mu_sum_right(const Permutation& x, const Permutation& y, const Permutation& ys,
                             const Permutation& s) {
        HalfExpPoly total;
        const int ly = y.length();
        for (int len = x.length(); len < ys.length(); ++len) {
            for (size_t idx : by_length_[static_cast<size_t>(len)]) {
                const Permutation& z = elements_[idx];
                if ((z * s).length() >= z.length()) continue;
                if (!leq(x, z) || !leq(z, ys)) continue;
                BigInt m = mu(z, ys);
                if (m.is_zero()) continue;
                total += HalfExpPoly::monomial(ly - z.length(), m) * kl(x, z);
            }
        }
        return total;
    }

    int pick_descent(const std::set<int>& descents) const {
        return pick_ == Pick::smallest ? *descents.begin() : *descents.rbegin();
    }
};

} // namespace klms

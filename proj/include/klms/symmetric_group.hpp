#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "klms/gen_set.hpp"
#include "klms/permutation.hpp"

namespace klms {

/// Left descents {i : s_i w < w} = {i : w^{-1}(i) > w^{-1}(i+1)}.
inline std::set<int> left_descents(const Permutation& w) {
    std::set<int> d;
    Permutation inv = w.inverse();
    for (int i = 1; i < w.rank(); ++i)
        if (inv(i) > inv(i + 1)) d.insert(i);
    return d;
}

/// Right descents {i : w s_i < w} = {i : w(i) > w(i+1)}.
inline std::set<int> right_descents(const Permutation& w) {
    std::set<int> d;
    for (int i = 1; i < w.rank(); ++i)
        if (w(i) > w(i + 1)) d.insert(i);
    return d;
}

/// Bruhat order via the Ehresmann prefix-sorting criterion: x <= y iff for
/// every k the sorted values of x(1..k) are componentwise <= those of y(1..k).
inline bool bruhat_leq(const Permutation& x, const Permutation& y) {
    if (x.rank() != y.rank())
        throw precondition_error("rank mismatch in Bruhat comparison");
    const int n = x.rank();
    std::vector<int> px, py;
    px.reserve(static_cast<size_t>(n));
    py.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        px.insert(std::upper_bound(px.begin(), px.end(), x(k)), x(k));
        py.insert(std::upper_bound(py.begin(), py.end(), y(k)), y(k));
        for (int j = 0; j < k; ++j)
            if (px[static_cast<size_t>(j)] > py[static_cast<size_t>(j)]) return false;
    }
    return true;
}

inline bool bruhat_less(const Permutation& x, const Permutation& y) {
    return x != y && bruhat_leq(x, y);
}

/// All of S_n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// Elements of the standard parabolic subgroup S_J, sorted.
inline std::vector<Permutation> subgroup_elements(const GenSet& J) {
    std::set<Permutation> seen;
    std::queue<Permutation> todo;
    Permutation e = Permutation::identity(J.rank());
    seen.insert(e);
    todo.push(e);
    while (!todo.empty()) {
        Permutation w = todo.front();
        todo.pop();
        for (int i : J.members()) {
            Permutation ws = w * Permutation::simple(J.rank(), i);
            if (seen.insert(ws).second) todo.push(ws);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Membership in S_J: w must permute each J-block of positions into itself.
inline bool in_subgroup(const Permutation& w, const GenSet& J) {
    int i = 1;
    const int n = w.rank();
    while (i <= n) {
        int j = i;
        while (j < n && J.contains(j)) ++j;  // block of positions i..j
        for (int p = i; p <= j; ++p)
            if (w(p) < i || w(p) > j) return false;
        i = j + 1;
    }
    return true;
}

/// Minimal coset representatives S_n^J = {w : ws > w for all s in J}.
inline std::vector<Permutation> min_coset_reps(const GenSet& J) {
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(J.rank())) {
        bool ok = true;
        for (int i : J.members())
            if (w(i) > w(i + 1)) { ok = false; break; }
        if (ok) out.push_back(w);
    }
    return out;
}

/// True iff w has no left descent in J1 and no right descent in J2 — the
/// characterization of the minimal-length element of S_{J1} w S_{J2}.
inline bool is_min_double_coset_rep(const Permutation& w, const GenSet& J1, const GenSet& J2) {
    Permutation inv = w.inverse();
    for (int i : J1.members())
        if (inv(i) > inv(i + 1)) return false;
    for (int i : J2.members())
        if (w(i) > w(i + 1)) return false;
    return true;
}

/// The full double coset S_{J1} v S_{J2}, sorted.
inline std::vector<Permutation> double_coset_elements(const Permutation& v, const GenSet& J1,
                                                      const GenSet& J2) {
    const int n = v.rank();
    std::set<Permutation> seen{v};
    std::queue<Permutation> todo;
    todo.push(v);
    while (!todo.empty()) {
        Permutation w = todo.front();
        todo.pop();
        for (int i : J1.members()) {
            Permutation sw = Permutation::simple(n, i) * w;
            if (seen.insert(sw).second) todo.push(sw);
        }
        for (int i : J2.members()) {
            Permutation ws = w * Permutation::simple(n, i);
            if (seen.insert(ws).second) todo.push(ws);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Minimal double-coset representatives S_n^{J1,J2}: the double cosets are
/// enumerated explicitly, their pairwise-disjoint union is checked to cover
/// S_n, and the by-length minimum of each is checked unique.
inline std::vector<Permutation> min_double_coset_reps(const GenSet& J1, const GenSet& J2) {
    const int n = J1.rank();
    if (J2.rank() != n) throw precondition_error("rank mismatch between generator sets");
    std::set<Permutation> remaining;
    for (const Permutation& w : all_permutations(n)) remaining.insert(w);
    std::vector<Permutation> reps;
    while (!remaining.empty()) {
        Permutation seed = *remaining.begin();
        std::vector<Permutation> coset = double_coset_elements(seed, J1, J2);
        const Permutation* best = nullptr;
        int best_len = -1, ties = 0;
        for (const Permutation& w : coset) {
            if (remaining.erase(w) == 0)
                throw invariant_violation("double cosets overlap at " + w.to_string());
            int len = w.length();
            if (best == nullptr || len < best_len) {
                best = &w;
                best_len = len;
                ties = 1;
            } else if (len == best_len) {
                ++ties;
            }
        }
        if (ties != 1)
            throw invariant_violation("double coset of " + seed.to_string() +
                                      " has no unique minimum");
        reps.push_back(*best);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

/// Unique maximal-length element of S_{J1} v S_{J2}, for v a minimal rep.
inline Permutation max_double_coset_element(const Permutation& v, const GenSet& J1,
                                            const GenSet& J2) {
    if (!is_min_double_coset_rep(v, J1, J2))
        throw precondition_error(v.to_string() +
                                 " is not a minimal double-coset representative");
    std::vector<Permutation> coset = double_coset_elements(v, J1, J2);
    const Permutation* best = nullptr;
    int best_len = -1, ties = 0;
    for (const Permutation& w : coset) {
        int len = w.length();
        if (len > best_len) {
            best = &w;
            best_len = len;
            ties = 1;
        } else if (len == best_len) {
            ++ties;
        }
    }
    if (ties != 1)
        throw invariant_violation("double coset of " + v.to_string() +
                                  " has no unique maximum");
    return *best;
}

/// Relative representatives S_{J1}^{J2,v}: elements w of S_{J1} with
/// ws > w for every non-identity s in S_{J1} ∩ v S_{J2} v^{-1}.
inline std::vector<Permutation> relative_reps(const Permutation& v, const GenSet& J1,
                                              const GenSet& J2) {
    if (!is_min_double_coset_rep(v, J1, J2))
        throw precondition_error(v.to_string() +
                                 " is not a minimal double-coset representative");
    Permutation vinv = v.inverse();
    std::vector<Permutation> intersection;
    for (const Permutation& u : subgroup_elements(J1))
        if (in_subgroup(vinv * u * v, J2)) intersection.push_back(u);
    std::vector<Permutation> out;
    for (const Permutation& w : subgroup_elements(J1)) {
        bool ok = true;
        int lw = w.length();
        for (const Permutation& s : intersection) {
            if (s == Permutation::identity(v.rank())) continue;
            if ((w * s).length() <= lw) { ok = false; break; }
        }
        if (ok) out.push_back(w);
    }
    return out;
}

/// Longest element w_J of the parabolic subgroup S_J: reverses every
/// maximal block of consecutive selected generators.
inline Permutation longest_element(const GenSet& J) {
    const int n = J.rank();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    int i = 1;
    while (i < n) {
        if (!J.contains(i)) { ++i; continue; }
        int j = i;
        while (j < n && J.contains(j)) ++j;  // positions i..j form a block
        std::reverse(img.begin() + (i - 1), img.begin() + j);
        i = j + 1;
    }
    return Permutation(std::move(img));
}

struct CosetLadder {
    int i0 = 0;                     // min{i : s_i in J}
    int i1 = 0;                     // end of the initial consecutive run
    GenSet j1;                      // J minus s_{i0}
    std::vector<Permutation> reps;  // w_1, ..., w_{i1-i0+1}
};

/// Decomposes S_J = ∐_j w_j S_{J1} with J1 = J \ {s_{i0}}; the cycles
/// w_i = (i1-i+1, ..., i0+1, i0) act by w_i(i0) = i1-i+1 and shift the
/// positions in between down by one. Checks S_n^{J1} = ∐_i S_n^J w_i.
inline CosetLadder coset_ladder(const GenSet& J) {
    if (J.empty()) throw precondition_error("coset_ladder requires a nonempty generator set");
    const int n = J.rank();
    CosetLadder out;
    out.i0 = *J.members().begin();
    out.i1 = out.i0 + 1;
    while (J.contains(out.i1)) ++out.i1;
    std::set<int> j1 = J.members();
    j1.erase(out.i0);
    out.j1 = GenSet(n, std::move(j1));
    for (int i = 1; i <= out.i1 - out.i0 + 1; ++i) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int t = 0; t < n; ++t) img[static_cast<size_t>(t)] = t + 1;
        int top = out.i1 - i + 1;
        for (int t = out.i0 + 1; t <= top; ++t) img[static_cast<size_t>(t - 1)] = t - 1;
        img[static_cast<size_t>(out.i0 - 1)] = top;
        out.reps.push_back(Permutation(std::move(img)));
    }

    std::set<Permutation> uni;
    size_t total = 0;
    for (const Permutation& rep : min_coset_reps(J))
        for (const Permutation& wi : out.reps) {
            uni.insert(rep * wi);
            ++total;
        }
    std::vector<Permutation> lhs = min_coset_reps(out.j1);
    if (total != uni.size() || uni != std::set<Permutation>(lhs.begin(), lhs.end()))
        throw invariant_violation("ladder cosets do not partition S_n^{J1} for J = {" +
                                  J.to_string() + "}");
    return out;
}

} // namespace klms

#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "klms/multisegment.hpp"

namespace klms {

inline constexpr size_t kDefaultEnumCap = 1000000;

/// The poset S(a) = {b : b <= a}: all multisegments reachable from the root
/// by elementary operations, with the reflexive-transitive closure of the
/// elementary step as order and its transitive reduction as cover relation.
class MsPoset {
public:
    /// BFS closure of `root` under elementary_ops. Throws
    /// enumeration_cap_error when more than `cap` elements appear.
    static MsPoset enumerate(const Multisegment& root, size_t cap = kDefaultEnumCap) {
        MsPoset p;
        p.root_ = root;
        std::map<Multisegment, size_t> index;
        std::vector<Multisegment> elems;
        std::vector<std::pair<size_t, size_t>> steps;  // (from, to), from > to in order
        std::queue<size_t> todo;
        index.emplace(root, 0);
        elems.push_back(root);
        todo.push(0);
        while (!todo.empty()) {
            size_t u = todo.front();
            todo.pop();
            for (const Multisegment& next : elementary_ops(elems[u])) {
                auto it = index.find(next);
                size_t v;
                if (it == index.end()) {
                    v = elems.size();
                    if (v >= cap)
                        throw enumeration_cap_error("S(" + root.to_string() +
                                                    ") exceeds cap of " + std::to_string(cap));
                    index.emplace(next, v);
                    elems.push_back(next);
                    todo.push(v);
                } else {
                    v = it->second;
                }
                steps.emplace_back(u, v);
            }
        }

        // Canonical element order, then relation matrices over it.
        const size_t n = elems.size();
        if (n > kStructureCap)
            throw enumeration_cap_error("S(" + root.to_string() + ") has " + std::to_string(n) +
                                        " elements; relation analysis capped at " +
                                        std::to_string(kStructureCap));
        std::vector<size_t> order(n);
        for (size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return elems[a] < elems[b]; });
        std::vector<size_t> pos(n);
        for (size_t i = 0; i < n; ++i) pos[order[i]] = i;

        p.elems_.resize(n);
        for (size_t i = 0; i < n; ++i) p.elems_[pos[i]] = elems[i];
        for (size_t i = 0; i < n; ++i) p.index_.emplace(p.elems_[i], i);
        p.root_index_ = pos[0];

        std::vector<std::vector<size_t>> down(n);  // strict elementary steps
        {
            std::vector<std::pair<size_t, size_t>> dedup;
            dedup.reserve(steps.size());
            for (auto [u, v] : steps) dedup.emplace_back(pos[u], pos[v]);
            std::sort(dedup.begin(), dedup.end());
            dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
            for (auto [u, v] : dedup) down[u].push_back(v);
        }

        // leq_[i][j] == 1 iff elems_[i] <= elems_[j]; DFS from each node.
        p.leq_.assign(n, std::vector<char>(n, 0));
        for (size_t i = 0; i < n; ++i) {
            std::vector<size_t> stack{i};
            p.leq_[i][i] = 1;
            while (!stack.empty()) {
                size_t u = stack.back();
                stack.pop_back();
                for (size_t v : down[u])
                    if (!p.leq_[v][i]) {
                        p.leq_[v][i] = 1;
                        stack.push_back(v);
                    }
            }
        }

        // Covers: step edges with no intermediate element.
        for (size_t u = 0; u < n; ++u)
            for (size_t v : down[u]) {
                bool direct = true;
                for (size_t m = 0; m < n && direct; ++m)
                    if (m != u && m != v && p.leq_[m][u] && p.leq_[v][m]) direct = false;
                if (direct) p.covers_.emplace_back(u, v);
            }
        std::sort(p.covers_.begin(), p.covers_.end());
        return p;
    }

    const Multisegment& root() const { return root_; }
    size_t size() const { return elems_.size(); }
    const std::vector<Multisegment>& elements() const { return elems_; }
    const Multisegment& element(size_t i) const { return elems_[i]; }

    bool contains(const Multisegment& m) const { return index_.count(m) > 0; }

    size_t index_of(const Multisegment& m) const {
        auto it = index_.find(m);
        if (it == index_.end())
            throw precondition_error(m.to_string() + " is not in S(" + root_.to_string() + ")");
        return it->second;
    }

    bool leq(const Multisegment& b, const Multisegment& c) const {
        return leq_[index_of(b)][index_of(c)];
    }
    bool leq_by_index(size_t b, size_t c) const { return leq_[b][c] != 0; }

    /// Cover pairs (upper, lower) as indices into elements().
    const std::vector<std::pair<size_t, size_t>>& covers() const { return covers_; }

    /// The unique minimal element; a non-unique minimum is a finding and
    /// throws invariant_violation naming two witnesses.
    const Multisegment& minimum() const {
        const Multisegment* found = nullptr;
        for (size_t i = 0; i < elems_.size(); ++i) {
            bool minimal = true;
            for (size_t j = 0; j < elems_.size() && minimal; ++j)
                if (j != i && leq_[j][i]) minimal = false;
            if (!minimal) continue;
            if (found != nullptr)
                throw invariant_violation("S(" + root_.to_string() +
                                          ") has two minimal elements: " + found->to_string() +
                                          " and " + elems_[i].to_string());
            found = &elems_[i];
        }
        if (found == nullptr) throw invariant_violation("poset has no minimal element");
        return *found;
    }

    /// DOT export of the cover relation, root highlighted, edges upper -> lower.
    std::string to_dot() const {
        std::string s = "digraph poset {\n  rankdir=TB;\n  node [shape=box];\n";
        for (size_t i = 0; i < elems_.size(); ++i) {
            s += "  n" + std::to_string(i) + " [label=\"" + elems_[i].to_string() + "\"";
            if (i == root_index_) s += ", style=bold, color=red";
            s += "];\n";
        }
        for (const auto& [u, v] : covers_)
            s += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
        s += "}\n";
        return s;
    }

private:
    static constexpr size_t kStructureCap = 50000;

    Multisegment root_;
    std::vector<Multisegment> elems_;  // sorted by Multisegment::operator<
    std::map<Multisegment, size_t> index_;
    std::vector<std::vector<char>> leq_;
    std::vector<std::pair<size_t, size_t>> covers_;
    size_t root_index_ = 0;
};

/// b <= a in the multisegment order, with the weight function as a
/// fast negative filter before enumerating S(a).
inline bool ms_leq(const Multisegment& b, const Multisegment& a,
                   size_t cap = kDefaultEnumCap) {
    if (b == a) return true;
    if (b.weight() != a.weight()) return false;
    return MsPoset::enumerate(a, cap).contains(b);
}

} // namespace klms

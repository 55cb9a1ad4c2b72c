#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "klms/errors.hpp"

namespace klms {

/// Integer interval [b, e] with b <= e.
struct Segment {
    int b = 0;
    int e = 0;

    Segment() = default;
    Segment(int begin, int end) : b(begin), e(end) {
        if (b > e)
            throw precondition_error("segment [" + std::to_string(b) + "," +
                                     std::to_string(e) + "] has begin > end");
    }

    int points() const { return e - b + 1; }
    bool contains(const Segment& o) const { return b <= o.b && o.e <= e; }

    bool operator==(const Segment& o) const { return b == o.b && e == o.e; }
    bool operator!=(const Segment& o) const { return !(*this == o); }
    bool operator<(const Segment& o) const { return b != o.b ? b < o.b : e < o.e; }

    std::string to_string() const {
        return "[" + std::to_string(b) + "," + std::to_string(e) + "]";
    }
};

/// Two segments are linked iff their union is a segment and neither
/// contains the other; such a pair admits an elementary operation.
inline bool linked(const Segment& d1, const Segment& d2) {
    if (d1.contains(d2) || d2.contains(d1)) return false;
    return std::max(d1.b, d2.b) <= std::min(d1.e, d2.e) + 1;
}

/// Finite multiset of segments, stored sorted by (b, e).
class Multisegment {
public:
    Multisegment() = default;

    explicit Multisegment(std::vector<Segment> segments) : segs_(std::move(segments)) {
        std::sort(segs_.begin(), segs_.end());
    }

    const std::vector<Segment>& segments() const { return segs_; }
    size_t size() const { return segs_.size(); }
    bool empty() const { return segs_.empty(); }

    bool operator==(const Multisegment& o) const { return segs_ == o.segs_; }
    bool operator!=(const Multisegment& o) const { return !(*this == o); }
    bool operator<(const Multisegment& o) const {
        return std::lexicographical_compare(segs_.begin(), segs_.end(), o.segs_.begin(),
                                            o.segs_.end());
    }

    /// Weight function: point i -> number of segments covering i.
    std::map<int, int> weight() const {
        std::map<int, int> w;
        for (const Segment& s : segs_)
            for (int i = s.b; i <= s.e; ++i) ++w[i];
        return w;
    }

    /// Beginnings, sorted with multiplicity.
    std::vector<int> begins() const {
        std::vector<int> v;
        v.reserve(segs_.size());
        for (const Segment& s : segs_) v.push_back(s.b);
        std::sort(v.begin(), v.end());
        return v;
    }

    /// Ends, sorted with multiplicity.
    std::vector<int> ends() const {
        std::vector<int> v;
        v.reserve(segs_.size());
        for (const Segment& s : segs_) v.push_back(s.e);
        std::sort(v.begin(), v.end());
        return v;
    }

    int min_end() const {
        if (empty()) throw precondition_error("min_end of empty multisegment");
        int m = segs_[0].e;
        for (const Segment& s : segs_) m = std::min(m, s.e);
        return m;
    }

    int max_begin() const {
        if (empty()) throw precondition_error("max_begin of empty multisegment");
        return segs_.back().b;
    }

    Multisegment translated(int delta) const {
        std::vector<Segment> segs;
        segs.reserve(segs_.size());
        for (const Segment& s : segs_) segs.emplace_back(s.b + delta, s.e + delta);
        return Multisegment(std::move(segs));
    }

    /// Text grammar: term ("+" term)*, term := [mult "*"] "[" b "," e "]".
    /// Equal segments are grouped ("2*[0,1]+[1,2]"); empty prints "0".
    std::string to_string() const {
        if (segs_.empty()) return "0";
        std::string s;
        size_t i = 0;
        while (i < segs_.size()) {
            size_t j = i;
            while (j < segs_.size() && segs_[j] == segs_[i]) ++j;
            if (!s.empty()) s += "+";
            if (j - i > 1) s += std::to_string(j - i) + "*";
            s += segs_[i].to_string();
            i = j;
        }
        return s;
    }

    static Multisegment parse(const std::string& text) {
        std::string t;
        for (char c : text)
            if (c != ' ' && c != '\t') t += c;
        if (t == "0" || t.empty()) return Multisegment{};
        std::vector<Segment> segs;
        size_t pos = 0;
        while (pos <= t.size()) {
            size_t plus = find_term_end(t, pos);
            parse_term(t.substr(pos, plus - pos), segs);
            if (plus == t.size()) break;
            pos = plus + 1;
        }
        return Multisegment(std::move(segs));
    }

private:
    std::vector<Segment> segs_;

    // Position of the '+' terminating the term starting at pos (terms contain
    // no '+' outside brackets in this grammar, but begins may be negative).
    static size_t find_term_end(const std::string& t, size_t pos) {
        int depth = 0;
        for (size_t i = pos; i < t.size(); ++i) {
            if (t[i] == '[') ++depth;
            else if (t[i] == ']') --depth;
            else if (t[i] == '+' && depth == 0) return i;
        }
        return t.size();
    }

    static void parse_term(const std::string& term, std::vector<Segment>& out) {
        if (term.empty()) throw parse_error("empty multisegment term");
        size_t pos = 0;
        long long mult = 1;
        size_t star = term.find('*');
        if (star != std::string::npos) {
            try {
                mult = std::stoll(term.substr(0, star));
            } catch (const std::exception&) {
                throw parse_error("bad multiplicity in '" + term + "'");
            }
            if (mult < 1) throw parse_error("multiplicity must be >= 1 in '" + term + "'");
            pos = star + 1;
        }
        if (pos >= term.size() || term[pos] != '[' || term.back() != ']')
            throw parse_error("expected [b,e] in '" + term + "'");
        std::string inner = term.substr(pos + 1, term.size() - pos - 2);
        size_t comma = inner.find(',');
        if (comma == std::string::npos) throw parse_error("expected [b,e] in '" + term + "'");
        int b = 0, e = 0;
        try {
            b = std::stoi(inner.substr(0, comma));
            e = std::stoi(inner.substr(comma + 1));
        } catch (const std::exception&) {
            throw parse_error("bad segment bounds in '" + term + "'");
        }
        if (b > e) throw parse_error("segment begin > end in '" + term + "'");
        for (long long k = 0; k < mult; ++k) out.emplace_back(b, e);
    }
};

/// All multisegments reachable from `a` by one elementary operation:
/// a linked pair {D1, D2} is replaced by {D1 ∪ D2, D1 ∩ D2}, the
/// intersection omitted when empty. Each result is strictly smaller.
inline std::vector<Multisegment> elementary_ops(const Multisegment& a) {
    std::set<Multisegment> out;
    const auto& segs = a.segments();
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (!linked(segs[i], segs[j])) continue;
            std::vector<Segment> next;
            next.reserve(segs.size());
            for (size_t k = 0; k < segs.size(); ++k)
                if (k != i && k != j) next.push_back(segs[k]);
            const Segment& d1 = segs[i];
            const Segment& d2 = segs[j];
            next.emplace_back(std::min(d1.b, d2.b), std::max(d1.e, d2.e));
            if (std::max(d1.b, d2.b) <= std::min(d1.e, d2.e))
                next.emplace_back(std::max(d1.b, d2.b), std::min(d1.e, d2.e));
            out.insert(Multisegment(std::move(next)));
        }
    }
    return {out.begin(), out.end()};
}

} // namespace klms

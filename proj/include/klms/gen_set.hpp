#pragma once

#include <set>
#include <string>

#include "klms/errors.hpp"

namespace klms {

/// A subset of the simple generators {s_1, ..., s_{n-1}} of S_n,
/// stored as the set of indices i with s_i selected.
class GenSet {
public:
    GenSet() = default;

    GenSet(int n, std::set<int> members) : n_(n), members_(std::move(members)) {
        if (n_ < 0) throw precondition_error("negative rank");
        for (int i : members_)
            if (i < 1 || i >= n_)
                throw precondition_error("generator index " + std::to_string(i) +
                                         " out of range for rank " + std::to_string(n_));
    }

    static GenSet empty(int n) { return GenSet(n, {}); }

    static GenSet full(int n) {
        std::set<int> m;
        for (int i = 1; i < n; ++i) m.insert(i);
        return GenSet(n, std::move(m));
    }

    /// Parses "1,3" (empty or blank text means the empty set).
    static GenSet parse(const std::string& text, int n) {
        std::set<int> m;
        size_t pos = 0;
        while (pos < text.size()) {
            size_t comma = text.find(',', pos);
            std::string tok =
                text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            size_t a = tok.find_first_not_of(" \t");
            if (a != std::string::npos) {
                size_t b = tok.find_last_not_of(" \t");
                tok = tok.substr(a, b - a + 1);
                try {
                    m.insert(std::stoi(tok));
                } catch (const std::exception&) {
                    throw parse_error("bad generator index '" + tok + "'");
                }
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        try {
            return GenSet(n, std::move(m));
        } catch (const precondition_error& e) {
            throw parse_error(std::string(e.what()));
        }
    }

    int rank() const { return n_; }
    const std::set<int>& members() const { return members_; }
    bool contains(int i) const { return members_.count(i) > 0; }
    bool empty() const { return members_.empty(); }
    size_t size() const { return members_.size(); }

    bool operator==(const GenSet& o) const { return n_ == o.n_ && members_ == o.members_; }
    bool operator!=(const GenSet& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s;
        for (int i : members_) {
            if (!s.empty()) s += ",";
            s += std::to_string(i);
        }
        return s;
    }

private:
    int n_ = 0;
    std::set<int> members_;
};

} // namespace klms

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "klms/errors.hpp"

namespace klms {

/// Element of S_n in one-line notation: images()[i-1] = w(i), values 1..n.
///
/// Composition convention: (u*v)(i) = u(v(i)). Under it the word s1*s2 in
/// S_3 is the permutation (2,3,1), i.e. words act left-to-right on values.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        const int n = static_cast<int>(img_.size());
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int v : img_) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                throw precondition_error("not a permutation of 1.." + std::to_string(n));
            seen[static_cast<size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
        return Permutation(std::move(img));
    }

    /// The simple transposition s_i = (i, i+1), 1 <= i <= n-1.
    static Permutation simple(int n, int i) {
        if (i < 1 || i >= n)
            throw precondition_error("simple generator index " + std::to_string(i) +
                                     " out of range for rank " + std::to_string(n));
        Permutation w = identity(n);
        std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
        return w;
    }

    int rank() const { return static_cast<int>(img_.size()); }

    /// w(i), 1-based.
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }

    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 1; i <= rank(); ++i) inv[static_cast<size_t>((*this)(i)-1)] = i;
        Permutation r;
        r.img_ = std::move(inv);
        return r;
    }

    friend Permutation operator*(const Permutation& u, const Permutation& v) {
        if (u.rank() != v.rank())
            throw precondition_error("rank mismatch in composition: " +
                                     std::to_string(u.rank()) + " vs " +
                                     std::to_string(v.rank()));
        Permutation r;
        r.img_.resize(u.img_.size());
        for (int i = 1; i <= u.rank(); ++i) r.img_[static_cast<size_t>(i - 1)] = u(v(i));
        return r;
    }

    /// Coxeter length = inversion count.
    int length() const {
        int n = rank(), len = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (img_[static_cast<size_t>(i)] > img_[static_cast<size_t>(j)]) ++len;
        return len;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const {
        if (img_.size() != o.img_.size()) return img_.size() < o.img_.size();
        return img_ < o.img_;
    }

    /// One-line text: digit string for n <= 9 ("2314"), comma-separated beyond.
    std::string to_string() const {
        std::string s;
        if (rank() <= 9) {
            for (int v : img_) s += static_cast<char>('0' + v);
        } else {
            for (size_t i = 0; i < img_.size(); ++i) {
                if (i > 0) s += ",";
                s += std::to_string(img_[i]);
            }
        }
        return s;
    }

    static Permutation parse(const std::string& text) {
        if (text.empty()) throw parse_error("empty permutation");
        std::vector<int> img;
        if (text.find(',') != std::string::npos) {
            size_t pos = 0;
            while (pos <= text.size()) {
                size_t comma = text.find(',', pos);
                std::string tok = text.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                try {
                    img.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw parse_error("bad permutation entry '" + tok + "'");
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        } else {
            for (char ch : text) {
                if (ch < '1' || ch > '9')
                    throw parse_error("bad permutation digit '" + std::string(1, ch) + "'");
                img.push_back(ch - '0');
            }
        }
        try {
            return Permutation(std::move(img));
        } catch (const precondition_error& e) {
            throw parse_error("'" + text + "' is " + e.what());
        }
    }

private:
    std::vector<int> img_;
};

} // namespace klms

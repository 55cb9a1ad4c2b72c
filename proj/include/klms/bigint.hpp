#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "klms/errors.hpp"

namespace klms {

/// Arbitrary-precision signed integer, sign-magnitude with base-10^9 limbs.
/// Supports exactly what exact polynomial coefficients need: add, subtract,
/// multiply, compare, and decimal I/O.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) { // NOLINT: implicit by design, coefficients read naturally
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // Avoid overflow on LLONG_MIN by peeling limbs from the negative value.
        unsigned long long mag =
            v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL : static_cast<unsigned long long>(v);
        while (mag > 0) {
            limbs_.push_back(static_cast<uint32_t>(mag % kBase));
            mag /= kBase;
        }
    }

    static BigInt from_string(const std::string& s) {
        if (s.empty()) throw parse_error("empty integer literal");
        size_t pos = 0;
        int sign = 1;
        if (s[0] == '-' || s[0] == '+') {
            sign = s[0] == '-' ? -1 : 1;
            pos = 1;
        }
        if (pos == s.size()) throw parse_error("sign without digits: '" + s + "'");
        BigInt r;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw parse_error("bad digit in integer literal: '" + s + "'");
            r.mul_small_add(10, static_cast<uint32_t>(s[pos] - '0'));
        }
        if (!r.limbs_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool operator==(const BigInt& o) const { return sign_ == o.sign_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }

    bool operator<(const BigInt& o) const {
        if (sign_ != o.sign_) return sign_ < o.sign_;
        int c = cmp_mag(limbs_, o.limbs_);
        return sign_ >= 0 ? c < 0 : c > 0;
    }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt operator+(const BigInt& o) const {
        if (sign_ == 0) return o;
        if (o.sign_ == 0) return *this;
        BigInt r;
        if (sign_ == o.sign_) {
            r.limbs_ = add_mag(limbs_, o.limbs_);
            r.sign_ = sign_;
        } else {
            int c = cmp_mag(limbs_, o.limbs_);
            if (c == 0) return BigInt{};
            if (c > 0) {
                r.limbs_ = sub_mag(limbs_, o.limbs_);
                r.sign_ = sign_;
            } else {
                r.limbs_ = sub_mag(o.limbs_, limbs_);
                r.sign_ = o.sign_;
            }
        }
        return r;
    }

    BigInt operator-(const BigInt& o) const { return *this + (-o); }

    BigInt operator*(const BigInt& o) const {
        if (sign_ == 0 || o.sign_ == 0) return BigInt{};
        BigInt r;
        r.sign_ = sign_ * o.sign_;
        r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
        for (size_t i = 0; i < limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < o.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
            }
            size_t k = i + o.limbs_.size();
            while (carry > 0) {
                uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<uint32_t>(cur % kBase);
                carry = cur / kBase;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::string s = sign_ < 0 ? "-" : "";
        s += std::to_string(limbs_.back());
        for (size_t i = limbs_.size(); i-- > 1;) {
            std::string limb = std::to_string(limbs_[i - 1]);
            s += std::string(9 - limb.size(), '0') + limb;
        }
        return s;
    }

    /// Checked narrowing; throws if the value does not fit in int64.
    long long to_int64() const {
        constexpr long long kMax = std::numeric_limits<long long>::max();
        long long acc = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            if (acc > (kMax - static_cast<long long>(limbs_[i])) / static_cast<long long>(kBase))
                throw invariant_violation("BigInt does not fit in int64: " + to_string());
            acc = acc * static_cast<long long>(kBase) + static_cast<long long>(limbs_[i]);
        }
        return sign_ < 0 ? -acc : acc;
    }

private:
    static constexpr uint32_t kBase = 1000000000;

    int sign_ = 0;                 // -1, 0, +1
    std::vector<uint32_t> limbs_;  // little-endian, empty iff zero

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }

    void mul_small_add(uint32_t m, uint32_t a) {
        uint64_t carry = a;
        for (auto& limb : limbs_) {
            uint64_t cur = static_cast<uint64_t>(limb) * m + carry;
            limb = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry > 0) {
            limbs_.push_back(static_cast<uint32_t>(carry % kBase));
            carry /= kBase;
        }
        if (!limbs_.empty() && sign_ == 0) sign_ = 1;
        trim();
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        uint32_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<uint32_t>(cur % kBase);
            carry = static_cast<uint32_t>(cur / kBase);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) {
                cur += kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

} // namespace klms

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "eulergraph/error.hpp"

namespace eulergraph {

// Permutation of the vertex labels {0,1,2,3}.
class Perm4 {
public:
    Perm4() : img_{0, 1, 2, 3} {}

    explicit Perm4(std::array<uint8_t, 4> img) : img_(img) {
        uint8_t seen = 0;
        for (uint8_t v : img_) {
            if (v > 3) throw InputError("permutation digit out of range");
            seen |= uint8_t(1u << v);
        }
        if (seen != 0xF) throw InputError("permutation digits not distinct");
    }

    // Four digits over {0,1,2,3}, e.g. "0132".
    static Perm4 from_digits(const std::string& s) {
        if (s.size() != 4) throw InputError("permutation must be four digits");
        std::array<uint8_t, 4> img{};
        for (int i = 0; i < 4; ++i) {
            if (s[i] < '0' || s[i] > '3')
                throw InputError("permutation digit out of range");
            img[i] = uint8_t(s[i] - '0');
        }
        return Perm4(img);
    }

    int operator[](int i) const { return img_[size_t(i)]; }

    Perm4 inverse() const {
        std::array<uint8_t, 4> inv{};
        for (uint8_t i = 0; i < 4; ++i) inv[img_[i]] = i;
        return Perm4(inv);
    }

    // (this * other)(x) = this(other(x))
    Perm4 operator*(const Perm4& o) const {
        std::array<uint8_t, 4> r{};
        for (int i = 0; i < 4; ++i) r[size_t(i)] = uint8_t(img_[size_t(o[i])]);
        return Perm4(r);
    }

    // +1 for even, -1 for odd.
    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[size_t(i)] > img_[size_t(j)]) ++inv;
        return (inv % 2) ? -1 : 1;
    }

    bool is_identity() const { return img_ == std::array<uint8_t, 4>{0, 1, 2, 3}; }

    bool operator==(const Perm4& o) const { return img_ == o.img_; }

    std::string digits() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[size_t(i)] = char('0' + img_[size_t(i)]);
        return s;
    }

private:
    std::array<uint8_t, 4> img_;
};

// Sign of an ordered tuple of four distinct labels as a permutation of 0123.
inline int tuple_sign(int a, int b, int c, int d) {
    int v[4] = {a, b, c, d};
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] > v[j]) ++inv;
    return (inv % 2) ? -1 : 1;
}

}  // namespace eulergraph

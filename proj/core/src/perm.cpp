#include "spun/perm.hpp"

#include <stdexcept>

namespace spun {

bool Perm4::valid() const {
    unsigned seen = 0;
    for (auto v : img_) {
        if (v > 3) return false;
        seen |= 1u << v;
    }
    return seen == 0xFu;
}

Perm4 Perm4::inverse() const {
    std::array<int, 4> inv{};
    for (int i = 0; i < 4; ++i) inv[img_[static_cast<std::size_t>(i)]] = i;
    return {inv[0], inv[1], inv[2], inv[3]};
}

Perm4 Perm4::operator*(const Perm4& other) const {
    return {(*this)[other[0]], (*this)[other[1]], (*this)[other[2]], (*this)[other[3]]};
}

int Perm4::sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::string Perm4::str() const {
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i) s += ' ';
        s += static_cast<char>('0' + img_[static_cast<std::size_t>(i)]);
    }
    return s;
}

int edge_number(int a, int b) {
    if (a == b || a < 0 || b < 0 || a > 3 || b > 3) throw std::invalid_argument("edge_number: bad vertex pair");
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e)
        if (kEdgeVertices[static_cast<std::size_t>(e)][0] == a && kEdgeVertices[static_cast<std::size_t>(e)][1] == b)
            return e;
    return -1;
}

int quad_separating(int a, int b) { return quad_missing_edge(edge_number(a, b)); }

}  // namespace spun

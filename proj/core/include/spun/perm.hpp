#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace spun {

/// A permutation of the tetrahedron vertex labels {0,1,2,3}.
/// Stored as images: perm[i] is where vertex i goes.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d) : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                                        static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    constexpr int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }

    /// True iff the four images are a rearrangement of 0..3.
    bool valid() const;

    Perm4 inverse() const;

    /// (*this * other)[i] == (*this)[other[i]].
    Perm4 operator*(const Perm4& other) const;

    /// +1 for even permutations, -1 for odd.
    int sign() const;

    std::string str() const;

    friend bool operator==(const Perm4&, const Perm4&) = default;
    friend auto operator<=>(const Perm4&, const Perm4&) = default;

private:
    std::array<std::uint8_t, 4> img_;
};

/// Edge slots of a tetrahedron, in the fixed order
/// 0:{0,1} 1:{0,2} 2:{0,3} 3:{1,2} 4:{1,3} 5:{2,3}.
/// Slot 5-e is the edge opposite slot e.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// edge_number(a, b) for a != b.
int edge_number(int a, int b);

/// Quad types: quad q is disjoint from edge slots q and 5-q, i.e. it separates
/// the endpoints of slot q from the endpoints of slot 5-q.
///   quad 0 : {0,1} | {2,3}
///   quad 1 : {0,2} | {1,3}
///   quad 2 : {0,3} | {1,2}
/// quad_separating(a, b) is the quad type that puts vertices a and b on the same side.
int quad_separating(int a, int b);

/// The quad type disjoint from edge slot e.
constexpr int quad_missing_edge(int e) { return e < 3 ? e : 5 - e; }

/// True iff vertex v is an endpoint of edge slot e.
constexpr bool edge_has_vertex(int e, int v) {
    return kEdgeVertices[static_cast<std::size_t>(e)][0] == v || kEdgeVertices[static_cast<std::size_t>(e)][1] == v;
}

/// True iff edge slot e lies on face f (the face opposite vertex f).
constexpr bool edge_on_face(int e, int f) { return !edge_has_vertex(e, f); }

}  // namespace spun

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spun {

class CurveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Side i of a triangle runs from corner i+1 to corner i+2 (indices mod 3),
/// i.e. counter-clockwise. A gluing is `flip`-free when it reverses that
/// direction, which is what an oriented surface needs.
struct SideGluing {
    int tri = -1;
    int side = -1;
    bool flip = false;
};

/// A closed triangulated surface given by side pairings.
class TriSurface {
public:
    TriSurface() = default;
    explicit TriSurface(std::vector<std::array<SideGluing, 3>> adjacency);

    int triangle_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edge_sides_.size()); }
    int vertex_count() const { return vertex_count_; }
    int euler_characteristic() const { return vertex_count() - edge_count() + triangle_count(); }
    bool orientable() const { return orientable_; }
    bool oriented() const { return oriented_; }

    const SideGluing& mate(int tri, int side) const { return adj_[idx(tri)][idx(side)]; }
    int edge(int tri, int side) const { return edge_of_[idx(tri)][idx(side)]; }
    /// The lexicographically first (triangle, side) on each edge.
    std::array<int, 2> canonical_side(int edge) const { return edge_sides_[idx(edge)]; }
    bool is_canonical(int tri, int side) const;
    int vertex(int tri, int corner) const { return vertex_of_[idx(tri)][idx(corner)]; }

    /// Image in the mate triangle of corner `corner` (an endpoint of `side`).
    int corner_across(int tri, int side, int corner) const;

    /// Edges are oriented from corner side+1 to side+2 of their canonical
    /// side. Returns the corner of `tri` at which edge(tri, side) starts.
    int tail_corner(int tri, int side) const;

private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

    std::vector<std::array<SideGluing, 3>> adj_;
    std::vector<std::array<int, 3>> edge_of_;
    std::vector<std::array<int, 2>> edge_sides_;
    std::vector<std::array<int, 3>> vertex_of_;
    int vertex_count_ = 0;
    bool orientable_ = false;
    bool oriented_ = false;
};

/// The standard torus: two triangles, edges a (vertical), b (horizontal) and
/// the diagonal d, numbered 0, 1, 2.
TriSurface two_triangle_torus();

/// Corner counts of a normal curve in one triangle: entry k counts arcs
/// cutting off corner k. Throws CurveError on odd or negative counts.
std::array<long, 3> corner_counts(const TriSurface& s, const std::vector<long>& weights, int tri);

bool is_normal_curve(const TriSurface& s, const std::vector<long>& weights);

/// One arc of a traced curve.
struct Turn {
    int tri = 0;
    int in_side = 0;
    int out_side = 0;
    friend bool operator==(const Turn&, const Turn&) = default;
};

using CurvePath = std::vector<Turn>;

/// Splits a normal curve into components, each traced as a cyclic sequence
/// of turns. Requires a flip-free surface.
std::vector<CurvePath> trace_curve(const TriSurface& s, const std::vector<long>& weights);

/// Signed count of crossings of the oriented curve over each edge
/// (+1 when leaving the triangle holding the canonical side).
std::vector<long> crossing_cochain(const TriSurface& s, const CurvePath& path);

/// Algebraic intersection number of two oriented curves.
long intersection(const TriSurface& s, const CurvePath& a, const CurvePath& b);
long intersection(const TriSurface& s, const std::vector<long>& cochain_a, const CurvePath& b);

/// The curve traversed backwards.
CurvePath reversed(const CurvePath& path);

/// Edge weights of a path (how often each edge is crossed).
std::vector<long> path_weights(const TriSurface& s, const CurvePath& path);

using Rational = boost::multiprecision::cpp_rational;
using Point = std::array<Rational, 2>;

/// A torus with a lift of its triangulation to the plane. The deck group is
/// the integer lattice, whose basis vectors are the peripheral classes
/// (first coordinate: meridian, second: longitude).
struct LinearTorus {
    TriSurface surface;
    std::vector<std::array<Point, 3>> corners;  // per triangle, a lift of its corners
};

LinearTorus standard_linear_torus();

/// Checks that the lifts agree across every side up to a lattice translation
/// and that all triangles are nondegenerate with one orientation.
bool is_consistent(const LinearTorus& t);

/// A primitive direction (p, q) and an offset c define the lines
/// q*x - p*y = c + k, k integer, which project to one closed curve.
/// Weight of each edge = number of those lines crossing the edge's lift.
std::vector<long> line_weights(const LinearTorus& t, long p, long q, const Rational& c);

/// An offset avoiding every vertex, chosen deterministically.
Rational generic_offset(const LinearTorus& t, long p, long q);

}  // namespace spun

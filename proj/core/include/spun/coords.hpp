#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spun/triangulation.hpp"

namespace spun {

using Rational = boost::multiprecision::cpp_rational;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Three quad weights per tetrahedron, flattened as 3*t + quad type.
struct QuadVector {
    std::vector<long> q;

    QuadVector() = default;
    explicit QuadVector(int tets) : q(static_cast<std::size_t>(3 * tets), 0) {}
    explicit QuadVector(std::vector<long> values);

    int tets() const { return static_cast<int>(q.size() / 3); }
    long at(int tet, int quad) const { return q[static_cast<std::size_t>(3 * tet + quad)]; }
    long& at(int tet, int quad) { return q[static_cast<std::size_t>(3 * tet + quad)]; }
    bool is_zero() const;

    friend bool operator==(const QuadVector&, const QuadVector&) = default;
};

/// Seven weights per tetrahedron: a triangle per corner and a quad per type.
struct SurfaceVector {
    std::vector<std::array<long, 4>> tri;
    std::vector<std::array<long, 3>> quad;

    SurfaceVector() = default;
    explicit SurfaceVector(int tets)
        : tri(static_cast<std::size_t>(tets), {0, 0, 0, 0}), quad(static_cast<std::size_t>(tets), {0, 0, 0}) {}

    int tets() const { return static_cast<int>(tri.size()); }
    QuadVector quads() const;
    long total_pieces() const;

    SurfaceVector operator+(const SurfaceVector& other) const;
    SurfaceVector scaled(long k) const;

    friend bool operator==(const SurfaceVector&, const SurfaceVector&) = default;
};

/// The surface made of one triangle at every corner of the given vertex class.
SurfaceVector vertex_link_vector(const IdealTriangulation& tri, int vertex_class);

struct MatchingSystem {
    int columns = 0;
    std::vector<std::vector<long>> rows;  // one per edge class
    std::string convention;

    long row_dot(std::size_t row, const std::vector<long>& v) const;
    bool satisfied_by(const QuadVector& v) const;
};

/// Text of the sign convention used by build_matching_system.
extern const char* const kQuadMatchingConvention;

/// One row per edge class. Walking the class, the slot with vertex labelling
/// (v0 v1 v2 v3) adds +1 to the quad putting v0 with v2 and -1 to the quad
/// putting v0 with v3. Throws TriangulationError on non-orientable input.
MatchingSystem build_matching_system(const IdealTriangulation& tri);

bool is_admissible(const QuadVector& v);
bool is_admissible(const SurfaceVector& v);
void check_dimensions(const IdealTriangulation& tri, const QuadVector& v);
void check_dimensions(const IdealTriangulation& tri, const SurfaceVector& v);

/// Number of normal arcs of v on face `face` of tetrahedron `tet` that cut off
/// the corner at vertex `corner` (corner != face).
long arc_count(const SurfaceVector& v, int tet, int face, int corner);

/// Number of points in which v meets edge slot `edge` of tetrahedron `tet`.
long edge_crossings(const SurfaceVector& v, int tet, int edge);

bool closed_matching_check(const IdealTriangulation& tri, const SurfaceVector& v);

/// V - E + F of the cell structure of the compact normal surface.
/// Throws std::invalid_argument if the vector does not match across faces.
long euler_characteristic_compact(const SurfaceVector& v, const IdealTriangulation& tri);

/// Dihedral angles in units of pi, indexed like QuadVector (the angle at the
/// pair of opposite edges that quad type misses). Each tetrahedron sums to 1,
/// each edge class to 2. Angles may be negative.
std::vector<Rational> generalized_angle_structure(const IdealTriangulation& tri);

/// Euler characteristic of the spun-normal surface with these quads, from
/// combinatorial Gauss-Bonnet against a generalized angle structure.
Rational spun_euler_characteristic(const IdealTriangulation& tri, const QuadVector& v);
Rational spun_euler_characteristic(const QuadVector& v, const std::vector<Rational>& angles);

/// `tet <t> tri <a b c d> quad <x y z>` lines; QuadVector files omit `tri`.
std::string format_surface(const SurfaceVector& v);
std::string format_quads(const QuadVector& v);
SurfaceVector parse_surface(std::string_view text);
QuadVector parse_quads(std::string_view text);

std::string format_rational(const Rational& r);

}  // namespace spun

#pragma once

#include <array>
#include <string>
#include <vector>

#include "spun/coords.hpp"
#include "spun/torus.hpp"
#include "spun/triangulation.hpp"

namespace spun {

/// The triangulated link of one ideal vertex: one triangle per corner of the
/// vertex class. Triangle k sits at corners()[k] = (tet, v); its corners are
/// the other three vertices of the tetrahedron, listed counter-clockwise with
/// respect to the orientation of the triangulation, and its side opposite
/// corner label a lies in face a of the tetrahedron.
class CuspLink {
public:
    CuspLink(const IdealTriangulation& tri, int vertex_class);

    int vertex() const { return vertex_; }
    const TriSurface& surface() const { return surface_; }
    int triangle_count() const { return surface_.triangle_count(); }
    int euler_characteristic() const { return surface_.euler_characteristic(); }
    bool orientable() const { return surface_.orientable(); }
    bool is_torus() const { return euler_characteristic() == 0 && orientable(); }

    const Corner& source(int triangle) const { return source_[static_cast<std::size_t>(triangle)]; }
    /// Tetrahedron vertex label at a corner of a link triangle.
    int label(int triangle, int corner) const {
        return labels_[static_cast<std::size_t>(triangle)][static_cast<std::size_t>(corner)];
    }
    int triangle_at(int tet, int vertex) const;

private:
    int vertex_;
    std::vector<Corner> source_;
    std::vector<std::array<int, 3>> labels_;
    std::vector<int> by_corner_;  // 4*tet + vertex -> triangle, or -1
    TriSurface surface_;
};

std::vector<CuspLink> vertex_links(const IdealTriangulation& tri);

/// For each link vertex (an end of an edge class), the signed sum of the
/// corner segments that the quads induce around it. All zero exactly when
/// the quad vector satisfies the matching equations.
std::vector<long> closure_defects(const CuspLink& link, const QuadVector& v);
bool closes_up(const CuspLink& link, const QuadVector& v);

/// Signed count of the spun surface's boundary crossing an oriented curve
/// in the link.
long quad_functional(const CuspLink& link, const QuadVector& v, const CurvePath& curve);

/// Oriented meridian/longitude pair with intersection(meridian, longitude) = +1.
struct PeripheralBasis {
    std::vector<long> meridian_weights;
    std::vector<long> longitude_weights;
    CurvePath meridian;
    CurvePath longitude;
    bool synthesized = false;
};

/// Uses the peripheral curves of the triangulation when present, otherwise
/// builds a basis from a tree/cotree decomposition of the link.
PeripheralBasis peripheral_basis(const IdealTriangulation& tri, const CuspLink& link);
PeripheralBasis basis_from_weights(const CuspLink& link, const std::vector<long>& meridian,
                                   const std::vector<long>& longitude);
PeripheralBasis synthesized_basis(const CuspLink& link);

/// Lattice element p * meridian + q * longitude.
struct LatticeClass {
    long p = 0;
    long q = 0;
    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
};

/// Primitive slope with canonical sign: q > 0, or q == 0 and p > 0, or both zero.
struct Slope {
    long p = 0;
    long q = 0;
    friend bool operator==(const Slope&, const Slope&) = default;
};

Slope reduce(const LatticeClass& c);
long multiplicity(const LatticeClass& c);
std::string to_string(const Slope& s);

/// Homology class of an oriented curve in the basis.
LatticeClass curve_class(const CuspLink& link, const PeripheralBasis& basis, const CurvePath& curve);

/// Boundary of the spun-normal surface with these quads at this cusp.
/// Throws std::invalid_argument if the corner segments do not close up.
LatticeClass boundary_class(const CuspLink& link, const PeripheralBasis& basis, const QuadVector& v);

}  // namespace spun

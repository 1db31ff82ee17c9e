#include "spun/surfaces.hpp"

namespace spun {

SolutionSet admissible_vertex_solutions(const IdealTriangulation& tri) {
    std::vector<PeripheralBasis> bases;
    for (const auto& link : vertex_links(tri)) bases.push_back(peripheral_basis(tri, link));
    return admissible_vertex_solutions(tri, std::move(bases));
}

std::vector<CuspBoundary> boundary_data(const SolutionSet& set, const QuadVector& v) {
    std::vector<CuspBoundary> out;
    for (std::size_t c = 0; c < set.links.size(); ++c) {
        CuspBoundary b;
        b.cusp = set.links[c].vertex();
        b.lattice = boundary_class(set.links[c], set.bases[c], v);
        b.slope = reduce(b.lattice);
        b.multiplicity = multiplicity(b.lattice);
        out.push_back(b);
    }
    return out;
}

SolutionSet admissible_vertex_solutions(const IdealTriangulation& tri, std::vector<PeripheralBasis> bases) {
    SolutionSet set;
    set.system = build_matching_system(tri);
    set.links = vertex_links(tri);
    if (bases.size() != set.links.size()) throw std::invalid_argument("need one peripheral basis per cusp");
    set.bases = std::move(bases);
    set.rays = extremal_rays(set.system);

    const auto angles = generalized_angle_structure(tri);
    for (std::size_t i = 0; i < set.rays.size(); ++i) {
        const Ray& r = set.rays[i];
        if (!r.admissible) continue;
        VertexSolution s;
        s.id = static_cast<int>(i);
        s.quads = QuadVector(r.v);
        s.boundary = boundary_data(set, s.quads);
        s.euler = spun_euler_characteristic(s.quads, angles);
        set.admissible.push_back(std::move(s));
    }
    return set;
}

}  // namespace spun

#pragma once

#include <vector>

#include "spun/cone.hpp"
#include "spun/coords.hpp"
#include "spun/cusp.hpp"

namespace spun {

struct CuspBoundary {
    int cusp = 0;
    LatticeClass lattice;
    Slope slope;
    long multiplicity = 0;
};

struct VertexSolution {
    int id = 0;  // index among all extremal rays
    QuadVector quads;
    std::vector<CuspBoundary> boundary;
    Rational euler;
};

struct SolutionSet {
    MatchingSystem system;
    std::vector<CuspLink> links;
    std::vector<PeripheralBasis> bases;
    std::vector<Ray> rays;
    std::vector<VertexSolution> admissible;
};

/// Matching equations, extremal rays, admissibility filter, then boundary
/// data and Euler characteristic for each admissible ray.
SolutionSet admissible_vertex_solutions(const IdealTriangulation& tri);

/// Same, with an explicit basis per cusp in place of the file's.
SolutionSet admissible_vertex_solutions(const IdealTriangulation& tri, std::vector<PeripheralBasis> bases);

std::vector<CuspBoundary> boundary_data(const SolutionSet& set, const QuadVector& v);

}  // namespace spun

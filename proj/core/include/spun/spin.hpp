#pragma once

#include <string>
#include <vector>

#include "spun/cusp.hpp"
#include "spun/torus.hpp"

namespace spun {

/// Periodic Tutte embedding of a torus cusp link with exact rationals. The
/// lattice of deck translations is Z^2 with (1,0) the meridian and (0,1) the
/// longitude of the basis. Throws CurveError if the embedding degenerates.
LinearTorus linear_structure(const CuspLink& link, const PeripheralBasis& basis);

/// Edge weights of the straight curve in the class p*meridian + q*longitude;
/// a non-primitive class gives that many parallel copies.
std::vector<long> straight_curve(const LinearTorus& torus, const LatticeClass& slope);

/// The lifted end of one cusp: the link torus in the plane, with the straight
/// boundary lines spun along the +x direction as height grows.
struct SpunEndModel {
    int cusp = 0;
    LinearTorus torus;
    std::string spin_direction = "+x";
};

SpunEndModel spun_end_model(const CuspLink& link, const PeripheralBasis& basis);
SpunEndModel spun_end_model(int cusp, LinearTorus torus);

/// Normal triangles cut from the link triangles by the slanted half-planes
/// between heights j-1 and j, for j = 1..levels.
std::vector<long> spin_level_counts(const SpunEndModel& model, const LatticeClass& slope, int levels);

}  // namespace spun

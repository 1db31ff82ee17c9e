#pragma once

#include <array>
#include <vector>

#include "spun/torus.hpp"

namespace spun::testing {

// Lattice class of a traced curve on the two-triangle torus, read from the
// unit-square picture: triangle 0 has its sides on x = 0, y = 0 and the
// diagonal, triangle 1 on x = 1, y = 1 and the diagonal.
inline std::array<long, 2> square_class(const CurvePath& path) {
    std::array<long, 2> c{0, 0};
    for (const Turn& t : path) {
        const long step = t.tri == 1 ? 1 : -1;
        if (t.out_side == 0) c[0] += step;
        if (t.out_side == 1) c[1] += step;
    }
    return c;
}

inline std::array<long, 2> unsigned_class(std::array<long, 2> c) {
    if (c[0] < 0 || (c[0] == 0 && c[1] < 0)) return {-c[0], -c[1]};
    return c;
}

struct EnumeratedCurve {
    std::array<long, 2> cls;  // unsigned
    std::vector<long> weights;
};

// Every connected normal curve with each edge weight at most max_weight.
inline std::vector<EnumeratedCurve> enumerate_connected_curves(long max_weight) {
    const TriSurface s = two_triangle_torus();
    std::vector<EnumeratedCurve> out;
    for (long a = 0; a <= max_weight; ++a)
        for (long b = 0; b <= max_weight; ++b)
            for (long d = 0; d <= max_weight; ++d) {
                const std::vector<long> w{a, b, d};
                if (a + b + d == 0 || !is_normal_curve(s, w)) continue;
                const auto parts = trace_curve(s, w);
                if (parts.size() != 1) continue;
                out.push_back({unsigned_class(square_class(parts[0])), w});
            }
    return out;
}

}  // namespace spun::testing

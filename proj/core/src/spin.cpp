#include "spun/spin.hpp"

#include <numeric>

#include "spun/linalg.hpp"

namespace spun {

namespace {
int mod3(int i) { return ((i % 3) + 3) % 3; }
}  // namespace

LinearTorus linear_structure(const CuspLink& link, const PeripheralBasis& basis) {
    const TriSurface& s = link.surface();
    if (!link.is_torus()) throw CurveError("cusp " + std::to_string(link.vertex()) + " is not a torus");
    const auto mu = crossing_cochain(s, basis.meridian);
    const auto lambda = crossing_cochain(s, basis.longitude);

    const int nv = s.vertex_count();
    const int ne = s.edge_count();
    std::vector<int> tail(static_cast<std::size_t>(ne)), head(static_cast<std::size_t>(ne));
    std::vector<Point> shift(static_cast<std::size_t>(ne));
    for (int e = 0; e < ne; ++e) {
        const auto side = s.canonical_side(e);
        tail[static_cast<std::size_t>(e)] = s.vertex(side[0], mod3(side[1] + 1));
        head[static_cast<std::size_t>(e)] = s.vertex(side[0], mod3(side[1] + 2));
        shift[static_cast<std::size_t>(e)] = {Rational(-lambda[static_cast<std::size_t>(e)]),
                                              Rational(mu[static_cast<std::size_t>(e)])};
    }

    // Harmonic positions with vertex 0 pinned at the origin.
    std::vector<Point> pos(static_cast<std::size_t>(nv), Point{Rational(0), Rational(0)});
    if (nv > 1) {
        const auto m = static_cast<std::size_t>(nv - 1);
        linalg::Matrix lap(m, std::vector<Rational>(m));
        std::vector<Rational> bx(m), by(m);
        auto add = [&](int at, int other, const Point& t) {
            if (at == 0) return;
            const auto r = static_cast<std::size_t>(at - 1);
            lap[r][r] -= 1;
            if (other != 0) lap[r][static_cast<std::size_t>(other - 1)] += 1;
            bx[r] -= t[0];
            by[r] -= t[1];
        };
        for (int e = 0; e < ne; ++e) {
            const auto& t = shift[static_cast<std::size_t>(e)];
            add(tail[static_cast<std::size_t>(e)], head[static_cast<std::size_t>(e)], t);
            add(head[static_cast<std::size_t>(e)], tail[static_cast<std::size_t>(e)], Point{-t[0], -t[1]});
        }
        const auto x = linalg::solve(lap, bx);
        const auto y = linalg::solve(lap, by);
        if (!x || !y) throw CurveError("cusp link graph is disconnected");
        for (std::size_t i = 0; i < m; ++i) pos[i + 1] = {(*x)[i], (*y)[i]};
    }

    auto step = [&](int tri, int side, int from) {
        const int e = s.edge(tri, side);
        const auto& a = pos[static_cast<std::size_t>(tail[static_cast<std::size_t>(e)])];
        const auto& b = pos[static_cast<std::size_t>(head[static_cast<std::size_t>(e)])];
        const auto& t = shift[static_cast<std::size_t>(e)];
        Point d{b[0] - a[0] + t[0], b[1] - a[1] + t[1]};
        if (s.tail_corner(tri, side) != from) d = {-d[0], -d[1]};
        return d;
    };

    LinearTorus out;
    out.surface = s;
    for (int t = 0; t < s.triangle_count(); ++t) {
        const Point p0 = pos[static_cast<std::size_t>(s.vertex(t, 0))];
        const Point d1 = step(t, 2, 0);
        const Point d2 = step(t, 1, 0);
        out.corners.push_back({p0, Point{p0[0] + d1[0], p0[1] + d1[1]}, Point{p0[0] + d2[0], p0[1] + d2[1]}});
    }
    if (!is_consistent(out)) throw CurveError("Tutte embedding of cusp " + std::to_string(link.vertex()) + " is degenerate");
    return out;
}

std::vector<long> straight_curve(const LinearTorus& torus, const LatticeClass& slope) {
    const long m = multiplicity(slope);
    if (m == 0) return std::vector<long>(static_cast<std::size_t>(torus.surface.edge_count()), 0);
    const long p = slope.p / m, q = slope.q / m;
    auto w = line_weights(torus, p, q, generic_offset(torus, p, q));
    for (auto& x : w) x *= m;
    return w;
}

SpunEndModel spun_end_model(const CuspLink& link, const PeripheralBasis& basis) {
    return spun_end_model(link.vertex(), linear_structure(link, basis));
}

SpunEndModel spun_end_model(int cusp, LinearTorus torus) {
    SpunEndModel model;
    model.cusp = cusp;
    model.torus = std::move(torus);
    return model;
}

std::vector<long> spin_level_counts(const SpunEndModel& model, const LatticeClass& slope, int levels) {
    if (levels <= 0) throw std::invalid_argument("levels must be positive");
    const TriSurface& s = model.torus.surface;
    std::vector<long> counts(static_cast<std::size_t>(levels), 0);
    const long m = multiplicity(slope);
    if (m == 0) return counts;
    const long p = slope.p / m, q = slope.q / m;
    const Rational c = generic_offset(model.torus, p, q);
    for (int j = 1; j <= levels; ++j) {
        // The half-plane x = z + c meets height z = j in the line x = c + j.
        const auto w = line_weights(model.torus, p, q, c + j);
        long pieces = 0;
        for (int t = 0; t < s.triangle_count(); ++t)
            for (long k : corner_counts(s, w, t)) pieces += k;
        counts[static_cast<std::size_t>(j - 1)] = m * pieces;
    }
    return counts;
}

}  // namespace spun

#include "spun/cusp.hpp"

#include <numeric>
#include <queue>

namespace spun {

namespace {
int mod3(int i) { return ((i % 3) + 3) % 3; }

int index_of(const std::array<int, 3>& a, int x) {
    for (int i = 0; i < 3; ++i)
        if (a[static_cast<std::size_t>(i)] == x) return i;
    throw std::logic_error("label not found in link triangle");
}
}  // namespace

CuspLink::CuspLink(const IdealTriangulation& tri, int vertex_class) : vertex_(vertex_class) {
    source_ = tri.vertices().at(static_cast<std::size_t>(vertex_class)).corners;
    by_corner_.assign(static_cast<std::size_t>(4 * tri.size()), -1);
    const auto& orient = tri.orientation();
    for (std::size_t k = 0; k < source_.size(); ++k) {
        const Corner& c = source_[k];
        by_corner_[static_cast<std::size_t>(4 * c.tet + c.vertex)] = static_cast<int>(k);
        std::array<int, 3> l{};
        int n = 0;
        for (int u = 0; u < 4; ++u)
            if (u != c.vertex) l[static_cast<std::size_t>(n++)] = u;
        const int sigma = orient ? (*orient)[static_cast<std::size_t>(c.tet)] : 1;
        if (sigma * Perm4(c.vertex, l[0], l[1], l[2]).sign() < 0) std::swap(l[1], l[2]);
        labels_.push_back(l);
    }

    std::vector<std::array<SideGluing, 3>> adj(source_.size());
    for (std::size_t k = 0; k < source_.size(); ++k) {
        const Corner& c = source_[k];
        const auto& l = labels_[k];
        for (int i = 0; i < 3; ++i) {
            const FaceGluing& g = tri.glue(c.tet, l[static_cast<std::size_t>(i)]);
            const int other = triangle_at(g.tet, g.perm[c.vertex]);
            const auto& m = labels_[static_cast<std::size_t>(other)];
            const int side = index_of(m, g.face);
            const int image = index_of(m, g.perm[l[static_cast<std::size_t>(mod3(i + 1))]]);
            adj[k][static_cast<std::size_t>(i)] = SideGluing{other, side, image == mod3(side + 1)};
        }
    }
    surface_ = TriSurface(std::move(adj));
}

int CuspLink::triangle_at(int tet, int vertex) const {
    const int k = by_corner_.at(static_cast<std::size_t>(4 * tet + vertex));
    if (k < 0) throw std::invalid_argument("corner is not in this cusp");
    return k;
}

std::vector<CuspLink> vertex_links(const IdealTriangulation& tri) {
    std::vector<CuspLink> out;
    for (const auto& v : tri.vertices()) out.emplace_back(tri, v.id);
    return out;
}

namespace {

// Segment weight of a turn entering through side `in` and leaving through `out`.
long turn_weight(const CuspLink& link, const QuadVector& v, int triangle, int in, int out) {
    const Corner& c = link.source(triangle);
    return v.at(c.tet, quad_separating(c.vertex, link.label(triangle, in))) -
           v.at(c.tet, quad_separating(c.vertex, link.label(triangle, out)));
}

void check_quads(const CuspLink& link, const QuadVector& v) {
    for (int k = 0; k < link.triangle_count(); ++k)
        if (link.source(k).tet >= v.tets()) throw DimensionError("quad vector too short for this cusp");
}

}  // namespace

std::vector<long> closure_defects(const CuspLink& link, const QuadVector& v) {
    check_quads(link, v);
    const TriSurface& s = link.surface();
    if (!s.oriented()) throw CurveError("closure needs an oriented cusp link");
    std::vector<long> sum(static_cast<std::size_t>(s.vertex_count()), 0);
    for (int t = 0; t < s.triangle_count(); ++t)
        for (int k = 0; k < 3; ++k)
            sum[static_cast<std::size_t>(s.vertex(t, k))] += turn_weight(link, v, t, mod3(k + 2), mod3(k + 1));
    return sum;
}

bool closes_up(const CuspLink& link, const QuadVector& v) {
    for (long d : closure_defects(link, v))
        if (d != 0) return false;
    return true;
}

long quad_functional(const CuspLink& link, const QuadVector& v, const CurvePath& curve) {
    check_quads(link, v);
    long h = 0;
    for (const Turn& t : curve) h += turn_weight(link, v, t.tri, t.in_side, t.out_side);
    return h;
}

PeripheralBasis basis_from_weights(const CuspLink& link, const std::vector<long>& meridian,
                                   const std::vector<long>& longitude) {
    const TriSurface& s = link.surface();
    auto single = [&](const std::vector<long>& w, const char* name) {
        auto parts = trace_curve(s, w);
        if (parts.size() != 1)
            throw CurveError(std::string(name) + " is not a single closed curve (" + std::to_string(parts.size()) +
                             " components)");
        return parts.front();
    };
    PeripheralBasis b;
    b.meridian_weights = meridian;
    b.longitude_weights = longitude;
    b.meridian = single(meridian, "meridian");
    b.longitude = single(longitude, "longitude");
    const long i = intersection(s, b.meridian, b.longitude);
    if (i == -1) {
        b.longitude = reversed(b.longitude);
    } else if (i != 1) {
        throw CurveError("peripheral curves meet algebraically " + std::to_string(i) + " times, not once");
    }
    return b;
}

PeripheralBasis synthesized_basis(const CuspLink& link) {
    const TriSurface& s = link.surface();
    if (!link.is_torus()) throw CurveError("cusp " + std::to_string(link.vertex()) + " is not a torus");
    const int n = s.triangle_count();

    // Dual spanning tree, breadth first from triangle 0.
    std::vector<int> parent(static_cast<std::size_t>(n), -2), parent_side(static_cast<std::size_t>(n), -1);
    std::vector<bool> dual_tree(static_cast<std::size_t>(s.edge_count()), false);
    parent[0] = -1;
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        const int t = todo.front();
        todo.pop();
        for (int i = 0; i < 3; ++i) {
            const SideGluing& g = s.mate(t, i);
            if (parent[static_cast<std::size_t>(g.tri)] != -2) continue;
            parent[static_cast<std::size_t>(g.tri)] = t;
            parent_side[static_cast<std::size_t>(g.tri)] = g.side;
            dual_tree[static_cast<std::size_t>(s.edge(t, i))] = true;
            todo.push(g.tri);
        }
    }

    // Primal spanning tree among the remaining edges.
    std::vector<int> uf(static_cast<std::size_t>(s.vertex_count()));
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[static_cast<std::size_t>(x)] != x) x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
        return x;
    };
    std::vector<int> leftover;
    for (int e = 0; e < s.edge_count(); ++e) {
        if (dual_tree[static_cast<std::size_t>(e)]) continue;
        const auto side = s.canonical_side(e);
        const int a = find(s.vertex(side[0], mod3(side[1] + 1)));
        const int b = find(s.vertex(side[0], mod3(side[1] + 2)));
        if (a != b) {
            uf[static_cast<std::size_t>(a)] = b;
        } else {
            leftover.push_back(e);
        }
    }
    if (leftover.size() != 2) throw std::logic_error("tree/cotree did not leave two edges on a torus");

    // Each leftover edge closes a loop in the dual tree.
    auto dual_cycle = [&](int e) {
        const auto side = s.canonical_side(e);
        const SideGluing& g = s.mate(side[0], side[1]);
        auto up = [&](int t) {
            std::vector<int> chain{t};
            while (parent[static_cast<std::size_t>(chain.back())] >= 0) chain.push_back(parent[static_cast<std::size_t>(chain.back())]);
            return chain;
        };
        const auto from_a = up(side[0]);
        const auto from_b = up(g.tri);
        std::vector<long> w(static_cast<std::size_t>(s.edge_count()), 0);
        w[static_cast<std::size_t>(e)] = 1;
        // Tree edges on exactly one of the two root paths form the tree path.
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (int t : from_a) ++count[static_cast<std::size_t>(t)];
        for (int t : from_b) ++count[static_cast<std::size_t>(t)];
        for (int t = 0; t < n; ++t) {
            if (count[static_cast<std::size_t>(t)] == 1 && parent[static_cast<std::size_t>(t)] >= 0)
                w[static_cast<std::size_t>(s.edge(t, parent_side[static_cast<std::size_t>(t)]))] = 1;
        }
        return w;
    };

    PeripheralBasis b = basis_from_weights(link, dual_cycle(leftover[0]), dual_cycle(leftover[1]));
    b.synthesized = true;
    return b;
}

PeripheralBasis peripheral_basis(const IdealTriangulation& tri, const CuspLink& link) {
    if (const PeripheralSpec* spec = tri.peripheral_for(link.vertex())) {
        if (spec->meridian.size() != static_cast<std::size_t>(link.surface().edge_count()))
            throw CurveError("peripheral curves for cusp " + std::to_string(link.vertex()) + " need " +
                             std::to_string(link.surface().edge_count()) + " weights");
        return basis_from_weights(link, spec->meridian, spec->longitude);
    }
    return synthesized_basis(link);
}

Slope reduce(const LatticeClass& c) {
    const long m = multiplicity(c);
    if (m == 0) return {0, 0};
    Slope s{c.p / m, c.q / m};
    if (s.q < 0 || (s.q == 0 && s.p < 0)) s = {-s.p, -s.q};
    return s;
}

long multiplicity(const LatticeClass& c) { return std::gcd(c.p, c.q); }

std::string to_string(const Slope& s) { return std::to_string(s.p) + "/" + std::to_string(s.q); }

LatticeClass curve_class(const CuspLink& link, const PeripheralBasis& basis, const CurvePath& curve) {
    const TriSurface& s = link.surface();
    return {-intersection(s, basis.longitude, curve), intersection(s, basis.meridian, curve)};
}

LatticeClass boundary_class(const CuspLink& link, const PeripheralBasis& basis, const QuadVector& v) {
    if (!closes_up(link, v))
        throw std::invalid_argument("corner segments do not close up at cusp " + std::to_string(link.vertex()));
    return {quad_functional(link, v, basis.longitude), -quad_functional(link, v, basis.meridian)};
}

}  // namespace spun

#include "spun/torus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace spun {

namespace {
int mod3(int i) { return ((i % 3) + 3) % 3; }
}  // namespace

TriSurface::TriSurface(std::vector<std::array<SideGluing, 3>> adjacency) : adj_(std::move(adjacency)) {
    const int n = triangle_count();
    for (int t = 0; t < n; ++t) {
        for (int i = 0; i < 3; ++i) {
            const SideGluing& g = mate(t, i);
            if (g.tri < 0 || g.tri >= n || g.side < 0 || g.side > 2)
                throw std::invalid_argument("side glued to a nonexistent side");
            if (g.tri == t && g.side == i) throw std::invalid_argument("side glued to itself");
            const SideGluing& back = mate(g.tri, g.side);
            if (back.tri != t || back.side != i || back.flip != g.flip)
                throw std::invalid_argument("side gluings are not involutive");
        }
    }

    edge_of_.assign(idx(n), {-1, -1, -1});
    for (int t = 0; t < n; ++t) {
        for (int i = 0; i < 3; ++i) {
            if (edge_of_[idx(t)][idx(i)] >= 0) continue;
            const int e = static_cast<int>(edge_sides_.size());
            edge_sides_.push_back({t, i});
            edge_of_[idx(t)][idx(i)] = e;
            const SideGluing& g = mate(t, i);
            edge_of_[idx(g.tri)][idx(g.side)] = e;
        }
    }

    std::vector<int> parent(idx(3 * n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[idx(x)] != x) x = parent[idx(x)] = parent[idx(parent[idx(x)])];
        return x;
    };
    for (int t = 0; t < n; ++t) {
        for (int i = 0; i < 3; ++i) {
            const SideGluing& g = mate(t, i);
            for (int k : {mod3(i + 1), mod3(i + 2)}) {
                const int a = find(3 * t + k), b = find(3 * g.tri + corner_across(t, i, k));
                if (a != b) parent[idx(std::max(a, b))] = std::min(a, b);
            }
        }
    }
    vertex_of_.assign(idx(n), {-1, -1, -1});
    std::vector<int> id(idx(3 * n), -1);
    for (int x = 0; x < 3 * n; ++x) {
        int& v = id[idx(find(x))];
        if (v < 0) v = vertex_count_++;
        vertex_of_[idx(x / 3)][idx(x % 3)] = v;
    }

    oriented_ = true;
    for (const auto& a : adj_)
        for (const auto& g : a) oriented_ = oriented_ && !g.flip;

    orientable_ = true;
    std::vector<int> sign(idx(n), 0);
    for (int root = 0; root < n && orientable_; ++root) {
        if (sign[idx(root)]) continue;
        sign[idx(root)] = 1;
        std::queue<int> todo;
        todo.push(root);
        while (!todo.empty() && orientable_) {
            const int t = todo.front();
            todo.pop();
            for (const auto& g : adj_[idx(t)]) {
                const int want = g.flip ? -sign[idx(t)] : sign[idx(t)];
                if (!sign[idx(g.tri)]) {
                    sign[idx(g.tri)] = want;
                    todo.push(g.tri);
                } else if (sign[idx(g.tri)] != want) {
                    orientable_ = false;
                }
            }
        }
    }
}

bool TriSurface::is_canonical(int tri, int side) const {
    const auto c = canonical_side(edge(tri, side));
    return c[0] == tri && c[1] == side;
}

int TriSurface::corner_across(int tri, int side, int corner) const {
    const SideGluing& g = mate(tri, side);
    if (corner == mod3(side + 1)) return g.flip ? mod3(g.side + 1) : mod3(g.side + 2);
    if (corner == mod3(side + 2)) return g.flip ? mod3(g.side + 2) : mod3(g.side + 1);
    throw std::invalid_argument("corner is not on that side");
}

int TriSurface::tail_corner(int tri, int side) const {
    if (is_canonical(tri, side)) return mod3(side + 1);
    const auto c = canonical_side(edge(tri, side));
    return corner_across(c[0], c[1], mod3(c[1] + 1));
}

TriSurface two_triangle_torus() {
    return TriSurface({{SideGluing{1, 0, false}, SideGluing{1, 1, false}, SideGluing{1, 2, false}},
                       {SideGluing{0, 0, false}, SideGluing{0, 1, false}, SideGluing{0, 2, false}}});
}

std::array<long, 3> corner_counts(const TriSurface& s, const std::vector<long>& weights, int tri) {
    if (weights.size() != static_cast<std::size_t>(s.edge_count()))
        throw CurveError("curve has " + std::to_string(weights.size()) + " weights, surface has " +
                         std::to_string(s.edge_count()) + " edges");
    std::array<long, 3> w{};
    for (int i = 0; i < 3; ++i) {
        w[static_cast<std::size_t>(i)] = weights[static_cast<std::size_t>(s.edge(tri, i))];
        if (w[static_cast<std::size_t>(i)] < 0) throw CurveError("negative edge weight");
    }
    std::array<long, 3> c{};
    for (int k = 0; k < 3; ++k) {
        const long twice = w[static_cast<std::size_t>(mod3(k + 1))] + w[static_cast<std::size_t>(mod3(k + 2))] -
                           w[static_cast<std::size_t>(k)];
        if (twice < 0 || twice % 2 != 0)
            throw CurveError("weights do not resolve into normal arcs in triangle " + std::to_string(tri));
        c[static_cast<std::size_t>(k)] = twice / 2;
    }
    return c;
}

bool is_normal_curve(const TriSurface& s, const std::vector<long>& weights) {
    try {
        for (int t = 0; t < s.triangle_count(); ++t) corner_counts(s, weights, t);
        return true;
    } catch (const CurveError&) {
        return false;
    }
}

std::vector<CurvePath> trace_curve(const TriSurface& s, const std::vector<long>& weights) {
    const int n = s.triangle_count();
    std::vector<std::array<long, 3>> counts(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) counts[static_cast<std::size_t>(t)] = corner_counts(s, weights, t);

    auto width = [&](int t, int i) { return weights[static_cast<std::size_t>(s.edge(t, i))]; };
    auto canonical_index = [&](int t, int i, long j) {
        if (s.is_canonical(t, i)) return j;
        return s.mate(t, i).flip ? j : width(t, i) - 1 - j;
    };

    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(s.edge_count()));
    for (int e = 0; e < s.edge_count(); ++e) seen[static_cast<std::size_t>(e)].assign(static_cast<std::size_t>(weights[static_cast<std::size_t>(e)]), false);

    std::vector<CurvePath> out;
    for (int e = 0; e < s.edge_count(); ++e) {
        for (long j0 = 0; j0 < weights[static_cast<std::size_t>(e)]; ++j0) {
            if (seen[static_cast<std::size_t>(e)][static_cast<std::size_t>(j0)]) continue;
            const auto start = s.canonical_side(e);
            int t = start[0], in = start[1];
            long j = j0;
            CurvePath path;
            do {
                seen[static_cast<std::size_t>(s.edge(t, in))][static_cast<std::size_t>(canonical_index(t, in, j))] = true;
                const auto& c = counts[static_cast<std::size_t>(t)];
                int out_side;
                long out_index;
                if (j < c[static_cast<std::size_t>(mod3(in + 1))]) {
                    const int k = mod3(in + 1);
                    out_side = mod3(k + 1);
                    out_index = width(t, out_side) - 1 - j;
                } else {
                    const int k = mod3(in + 2);
                    out_side = mod3(k + 2);
                    out_index = width(t, in) - 1 - j;
                }
                path.push_back({t, in, out_side});
                const SideGluing& g = s.mate(t, out_side);
                j = g.flip ? out_index : width(t, out_side) - 1 - out_index;
                t = g.tri;
                in = g.side;
            } while (!(t == start[0] && in == start[1] && j == j0));
            out.push_back(std::move(path));
        }
    }
    return out;
}

std::vector<long> crossing_cochain(const TriSurface& s, const CurvePath& path) {
    if (!s.oriented()) throw CurveError("intersection numbers need an oriented surface");
    std::vector<long> phi(static_cast<std::size_t>(s.edge_count()), 0);
    for (const Turn& turn : path)
        phi[static_cast<std::size_t>(s.edge(turn.tri, turn.out_side))] += s.is_canonical(turn.tri, turn.out_side) ? 1 : -1;
    return phi;
}

long intersection(const TriSurface& s, const std::vector<long>& cochain_a, const CurvePath& b) {
    long total = 0;
    for (const Turn& turn : b) {
        const int x = s.tail_corner(turn.tri, turn.in_side);
        const int y = s.tail_corner(turn.tri, turn.out_side);
        if (x == y) continue;
        const int z = 3 - x - y;
        const long along = s.tail_corner(turn.tri, z) == x ? 1 : -1;
        total += along * cochain_a[static_cast<std::size_t>(s.edge(turn.tri, z))];
    }
    return total;
}

long intersection(const TriSurface& s, const CurvePath& a, const CurvePath& b) {
    return intersection(s, crossing_cochain(s, a), b);
}

CurvePath reversed(const CurvePath& path) {
    CurvePath out;
    out.reserve(path.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back({it->tri, it->out_side, it->in_side});
    return out;
}

std::vector<long> path_weights(const TriSurface& s, const CurvePath& path) {
    std::vector<long> w(static_cast<std::size_t>(s.edge_count()), 0);
    for (const Turn& turn : path) ++w[static_cast<std::size_t>(s.edge(turn.tri, turn.out_side))];
    return w;
}

LinearTorus standard_linear_torus() {
    auto pt = [](long x, long y) { return Point{Rational(x), Rational(y)}; };
    LinearTorus t;
    t.surface = two_triangle_torus();
    t.corners = {{pt(1, 0), pt(0, 1), pt(0, 0)}, {pt(0, 1), pt(1, 0), pt(1, 1)}};
    return t;
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

boost::multiprecision::cpp_int floor_of(const Rational& r) {
    boost::multiprecision::cpp_int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

Rational height(const Point& pt, long p, long q) { return q * pt[0] - p * pt[1]; }

}  // namespace

bool is_consistent(const LinearTorus& t) {
    const TriSurface& s = t.surface;
    if (t.corners.size() != static_cast<std::size_t>(s.triangle_count())) return false;
    int orientation = 0;
    for (int a = 0; a < s.triangle_count(); ++a) {
        const auto& c = t.corners[static_cast<std::size_t>(a)];
        const Rational area = cross(c[0], c[1], c[2]);
        if (area == 0) return false;
        const int sgn = area > 0 ? 1 : -1;
        if (orientation == 0) orientation = sgn;
        if (sgn != orientation) return false;
        for (int i = 0; i < 3; ++i) {
            const SideGluing& g = s.mate(a, i);
            const auto& d = t.corners[static_cast<std::size_t>(g.tri)];
            Point shift[2];
            int n = 0;
            for (int k : {mod3(i + 1), mod3(i + 2)}) {
                const Point& here = c[static_cast<std::size_t>(k)];
                const Point& there = d[static_cast<std::size_t>(s.corner_across(a, i, k))];
                shift[n++] = {there[0] - here[0], there[1] - here[1]};
            }
            if (shift[0] != shift[1] || !is_integer(shift[0][0]) || !is_integer(shift[0][1])) return false;
        }
    }
    return true;
}

std::vector<long> line_weights(const LinearTorus& t, long p, long q, const Rational& c) {
    const TriSurface& s = t.surface;
    std::vector<long> w(static_cast<std::size_t>(s.edge_count()), 0);
    if (p == 0 && q == 0) return w;
    for (int e = 0; e < s.edge_count(); ++e) {
        const auto side = s.canonical_side(e);
        const auto& pts = t.corners[static_cast<std::size_t>(side[0])];
        Rational a = height(pts[static_cast<std::size_t>(mod3(side[1] + 1))], p, q) - c;
        Rational b = height(pts[static_cast<std::size_t>(mod3(side[1] + 2))], p, q) - c;
        if (is_integer(a) || is_integer(b)) throw CurveError("line passes through a vertex");
        if (b < a) std::swap(a, b);
        w[static_cast<std::size_t>(e)] = static_cast<long>(floor_of(b) - floor_of(a));
    }
    return w;
}

Rational generic_offset(const LinearTorus& t, long p, long q) {
    std::vector<Rational> f;
    for (const auto& tri : t.corners)
        for (const auto& pt : tri) f.push_back(frac(height(pt, p, q)));
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    Rational best_gap = f.front() + 1 - f.back();
    Rational best_mid = frac(f.back() + best_gap / 2);
    for (std::size_t i = 1; i < f.size(); ++i) {
        const Rational gap = f[i] - f[i - 1];
        if (gap > best_gap) {
            best_gap = gap;
            best_mid = f[i - 1] + gap / 2;
        }
    }
    return best_mid;
}

}  // namespace spun

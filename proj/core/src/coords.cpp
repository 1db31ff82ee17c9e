#include "spun/coords.hpp"

#include <algorithm>
#include <sstream>

#include "spun/linalg.hpp"

namespace spun {

const char* const kQuadMatchingConvention = "edge-walk: +quad(v0,v2) -quad(v0,v3); leave via face v2";

QuadVector::QuadVector(std::vector<long> values) : q(std::move(values)) {
    if (q.size() % 3 != 0) throw DimensionError("quad vector length must be a multiple of 3");
}

bool QuadVector::is_zero() const {
    return std::all_of(q.begin(), q.end(), [](long x) { return x == 0; });
}

QuadVector SurfaceVector::quads() const {
    QuadVector out(tets());
    for (int t = 0; t < tets(); ++t)
        for (int k = 0; k < 3; ++k) out.at(t, k) = quad[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
    return out;
}

long SurfaceVector::total_pieces() const {
    long n = 0;
    for (const auto& a : tri)
        for (long x : a) n += x;
    for (const auto& a : quad)
        for (long x : a) n += x;
    return n;
}

SurfaceVector SurfaceVector::operator+(const SurfaceVector& other) const {
    if (other.tets() != tets()) throw DimensionError("surface vectors have different sizes");
    SurfaceVector out = *this;
    for (std::size_t t = 0; t < tri.size(); ++t) {
        for (std::size_t i = 0; i < 4; ++i) out.tri[t][i] += other.tri[t][i];
        for (std::size_t i = 0; i < 3; ++i) out.quad[t][i] += other.quad[t][i];
    }
    return out;
}

SurfaceVector SurfaceVector::scaled(long k) const {
    SurfaceVector out = *this;
    for (auto& a : out.tri)
        for (auto& x : a) x *= k;
    for (auto& a : out.quad)
        for (auto& x : a) x *= k;
    return out;
}

SurfaceVector vertex_link_vector(const IdealTriangulation& tri, int vertex_class) {
    SurfaceVector v(tri.size());
    for (const auto& c : tri.vertices().at(static_cast<std::size_t>(vertex_class)).corners)
        v.tri[static_cast<std::size_t>(c.tet)][static_cast<std::size_t>(c.vertex)] = 1;
    return v;
}

long MatchingSystem::row_dot(std::size_t row, const std::vector<long>& v) const {
    long s = 0;
    for (std::size_t c = 0; c < v.size(); ++c) s += rows[row][c] * v[c];
    return s;
}

bool MatchingSystem::satisfied_by(const QuadVector& v) const {
    if (v.q.size() != static_cast<std::size_t>(columns)) throw DimensionError("quad vector does not match system");
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (row_dot(r, v.q) != 0) return false;
    return true;
}

MatchingSystem build_matching_system(const IdealTriangulation& tri) {
    if (!tri.orientable()) throw TriangulationError("matching equations need an orientable triangulation");
    MatchingSystem m;
    m.columns = 3 * tri.size();
    m.convention = kQuadMatchingConvention;
    for (const auto& e : tri.edges()) {
        std::vector<long> row(static_cast<std::size_t>(m.columns), 0);
        for (const auto& s : e.slots) {
            const Perm4& p = s.vertices;
            row[static_cast<std::size_t>(3 * s.tet + quad_separating(p[0], p[2]))] += 1;
            row[static_cast<std::size_t>(3 * s.tet + quad_separating(p[0], p[3]))] -= 1;
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

bool is_admissible(const QuadVector& v) {
    for (int t = 0; t < v.tets(); ++t) {
        int used = 0;
        for (int k = 0; k < 3; ++k) used += v.at(t, k) != 0;
        if (used > 1) return false;
    }
    return true;
}

bool is_admissible(const SurfaceVector& v) { return is_admissible(v.quads()); }

void check_dimensions(const IdealTriangulation& tri, const QuadVector& v) {
    if (v.tets() != tri.size() || v.q.size() % 3 != 0)
        throw DimensionError("quad vector has " + std::to_string(v.q.size()) + " entries, expected " +
                             std::to_string(3 * tri.size()));
}

void check_dimensions(const IdealTriangulation& tri, const SurfaceVector& v) {
    if (v.tets() != tri.size() || v.quad.size() != v.tri.size())
        throw DimensionError("surface vector has " + std::to_string(v.tets()) + " tetrahedra, expected " +
                             std::to_string(tri.size()));
}

long arc_count(const SurfaceVector& v, int tet, int face, int corner) {
    const auto t = static_cast<std::size_t>(tet);
    return v.tri[t][static_cast<std::size_t>(corner)] + v.quad[t][static_cast<std::size_t>(quad_separating(corner, face))];
}

long edge_crossings(const SurfaceVector& v, int tet, int edge) {
    const auto t = static_cast<std::size_t>(tet);
    const auto& ends = kEdgeVertices[static_cast<std::size_t>(edge)];
    long n = v.tri[t][static_cast<std::size_t>(ends[0])] + v.tri[t][static_cast<std::size_t>(ends[1])];
    for (int q = 0; q < 3; ++q)
        if (q != quad_missing_edge(edge)) n += v.quad[t][static_cast<std::size_t>(q)];
    return n;
}

bool closed_matching_check(const IdealTriangulation& tri, const SurfaceVector& v) {
    check_dimensions(tri, v);
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue(t, f);
            for (int c = 0; c < 4; ++c) {
                if (c == f) continue;
                if (arc_count(v, t, f, c) != arc_count(v, g.tet, g.face, g.perm[c])) return false;
            }
        }
    }
    return true;
}

long euler_characteristic_compact(const SurfaceVector& v, const IdealTriangulation& tri) {
    if (!closed_matching_check(tri, v))
        throw std::invalid_argument("surface vector does not match across faces");
    const long faces = v.total_pieces();
    long edges = 0;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue(t, f);
            if (g.tet < t || (g.tet == t && g.face < f)) continue;
            for (int c = 0; c < 4; ++c)
                if (c != f) edges += arc_count(v, t, f, c);
        }
    }
    long vertices = 0;
    for (const auto& e : tri.edges()) vertices += edge_crossings(v, e.slots.front().tet, e.slots.front().edge);
    return vertices - edges + faces;
}

std::vector<Rational> generalized_angle_structure(const IdealTriangulation& tri) {
    const int n = tri.size();
    linalg::Matrix a;
    std::vector<Rational> b;
    for (int t = 0; t < n; ++t) {
        std::vector<Rational> row(static_cast<std::size_t>(3 * n));
        for (int k = 0; k < 3; ++k) row[static_cast<std::size_t>(3 * t + k)] = 1;
        a.push_back(std::move(row));
        b.emplace_back(1);
    }
    for (const auto& e : tri.edges()) {
        std::vector<Rational> row(static_cast<std::size_t>(3 * n));
        for (const auto& s : e.slots) row[static_cast<std::size_t>(3 * s.tet + quad_missing_edge(s.edge))] += 1;
        a.push_back(std::move(row));
        b.emplace_back(2);
    }
    auto x = linalg::solve(std::move(a), b);
    if (!x) throw TriangulationError("triangulation admits no generalized angle structure");
    return *x;
}

Rational spun_euler_characteristic(const QuadVector& v, const std::vector<Rational>& angles) {
    if (angles.size() != v.q.size()) throw DimensionError("angle structure does not match quad vector");
    Rational chi = 0;
    for (std::size_t i = 0; i < v.q.size(); ++i) chi -= angles[i] * v.q[i];
    return chi;
}

Rational spun_euler_characteristic(const IdealTriangulation& tri, const QuadVector& v) {
    check_dimensions(tri, v);
    return spun_euler_characteristic(v, generalized_angle_structure(tri));
}

std::string format_surface(const SurfaceVector& v) {
    std::ostringstream out;
    for (int t = 0; t < v.tets(); ++t) {
        const auto& a = v.tri[static_cast<std::size_t>(t)];
        const auto& q = v.quad[static_cast<std::size_t>(t)];
        out << "tet " << t << " tri " << a[0] << ' ' << a[1] << ' ' << a[2] << ' ' << a[3] << " quad " << q[0] << ' '
            << q[1] << ' ' << q[2] << '\n';
    }
    return out.str();
}

std::string format_quads(const QuadVector& v) {
    std::ostringstream out;
    for (int t = 0; t < v.tets(); ++t)
        out << "tet " << t << " quad " << v.at(t, 0) << ' ' << v.at(t, 1) << ' ' << v.at(t, 2) << '\n';
    return out.str();
}

namespace {

struct TetLine {
    int tet = -1;
    std::optional<std::array<long, 4>> tri;
    std::array<long, 3> quad{};
};

std::vector<TetLine> parse_tet_lines(std::string_view text) {
    std::vector<TetLine> lines;
    std::istringstream in{std::string(text)};
    int lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string word;
        if (!(ls >> word)) continue;
        TetLine tl;
        if (word != "tet" || !(ls >> tl.tet)) throw ParseError("expected 'tet <t>'", lineno);
        if (!(ls >> word)) throw ParseError("missing weights", lineno);
        if (word == "tri") {
            std::array<long, 4> a{};
            for (auto& x : a)
                if (!(ls >> x)) throw ParseError("expected 4 triangle weights", lineno);
            tl.tri = a;
            if (!(ls >> word)) throw ParseError("missing 'quad'", lineno);
        }
        if (word != "quad") throw ParseError("expected 'quad'", lineno);
        for (auto& x : tl.quad)
            if (!(ls >> x)) throw ParseError("expected 3 quad weights", lineno);
        if (ls >> word) throw ParseError("trailing text '" + word + "'", lineno);
        if (tl.tet != static_cast<int>(lines.size())) throw ParseError("tetrahedra must be listed in order", lineno);
        for (long x : tl.quad)
            if (x < 0) throw ParseError("weights must be nonnegative", lineno);
        if (tl.tri)
            for (long x : *tl.tri)
                if (x < 0) throw ParseError("weights must be nonnegative", lineno);
        lines.push_back(tl);
    }
    return lines;
}

}  // namespace

SurfaceVector parse_surface(std::string_view text) {
    const auto lines = parse_tet_lines(text);
    SurfaceVector v(static_cast<int>(lines.size()));
    for (std::size_t t = 0; t < lines.size(); ++t) {
        if (!lines[t].tri) throw ParseError("surface vector line without 'tri' weights", static_cast<int>(t) + 1);
        v.tri[t] = *lines[t].tri;
        v.quad[t] = lines[t].quad;
    }
    return v;
}

QuadVector parse_quads(std::string_view text) {
    const auto lines = parse_tet_lines(text);
    QuadVector v(static_cast<int>(lines.size()));
    for (std::size_t t = 0; t < lines.size(); ++t)
        for (int k = 0; k < 3; ++k) v.at(static_cast<int>(t), k) = lines[t].quad[static_cast<std::size_t>(k)];
    return v;
}

std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace spun

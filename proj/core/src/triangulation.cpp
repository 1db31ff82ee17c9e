#include "spun/triangulation.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "spun/cusp.hpp"

namespace spun {

IdealTriangulation::IdealTriangulation(int tet_count, std::vector<std::optional<FaceGluing>> gluings,
                                       std::vector<PeripheralSpec> peripheral)
    : tet_count_(tet_count), peripheral_(std::move(peripheral)) {
    if (tet_count < 1) throw TriangulationError("triangulation needs at least one tetrahedron");
    if (gluings.size() != static_cast<std::size_t>(4 * tet_count))
        throw TriangulationError("gluing table has wrong size");

    auto at = [&](int t, int f) -> std::optional<FaceGluing>& { return gluings[static_cast<std::size_t>(4 * t + f)]; };

    // Check each given gluing and fill in its mirror.
    for (int t = 0; t < tet_count; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (!at(t, f)) continue;
            const FaceGluing g = *at(t, f);
            const std::string here = "face " + std::to_string(t) + ":" + std::to_string(f);
            if (g.tet < 0 || g.tet >= tet_count || g.face < 0 || g.face > 3)
                throw TriangulationError(here + " glued to a nonexistent face");
            if (!g.perm.valid()) throw TriangulationError(here + " has an invalid vertex permutation");
            if (g.perm[f] != g.face)
                throw TriangulationError(here + ": permutation does not carry face " + std::to_string(f) + " to face " +
                                         std::to_string(g.face));
            if (g.tet == t && g.face == f) throw TriangulationError(here + " glued to itself");
            auto& back = at(g.tet, g.face);
            const FaceGluing mirror{t, f, g.perm.inverse()};
            if (!back) {
                back = mirror;
            } else if (back->tet != t || back->face != f) {
                throw TriangulationError("face glued twice: face " + std::to_string(g.tet) + ":" +
                                         std::to_string(g.face));
            } else if (back->perm != mirror.perm) {
                throw TriangulationError("non-involutive gluing between " + here + " and face " +
                                         std::to_string(g.tet) + ":" + std::to_string(g.face));
            }
        }
    }
    gluings_.reserve(gluings.size());
    for (int t = 0; t < tet_count; ++t) {
        for (int f = 0; f < 4; ++f) {
            if (!at(t, f)) throw TriangulationError("face " + std::to_string(t) + ":" + std::to_string(f) + " is unglued");
            gluings_.push_back(*at(t, f));
        }
    }

    build_edges();
    build_vertices();
    build_orientation();
}

void IdealTriangulation::build_edges() {
    slots_.assign(static_cast<std::size_t>(6 * tet_count_), SlotInfo{});
    for (int t0 = 0; t0 < tet_count_; ++t0) {
        for (int e0 = 0; e0 < 6; ++e0) {
            if (slots_[static_cast<std::size_t>(6 * t0 + e0)].edge_class >= 0) continue;

            EdgeClass cls;
            cls.id = static_cast<int>(edges_.size());
            const int a = kEdgeVertices[static_cast<std::size_t>(e0)][0];
            const int b = kEdgeVertices[static_cast<std::size_t>(e0)][1];
            int c = -1, d = -1;
            for (int v = 0; v < 4; ++v) {
                if (v == a || v == b) continue;
                (c < 0 ? c : d) = v;
            }
            const Perm4 start(a, b, c, d);

            int t = t0;
            Perm4 p = start;
            while (true) {
                const int e = edge_number(p[0], p[1]);
                auto& info = slots_[static_cast<std::size_t>(6 * t + e)];
                if (info.edge_class >= 0) {
                    // Revisiting a slot before closing up means the walk came
                    // back along the edge in the opposite direction.
                    if (!(t == t0 && p == start)) cls.reversed = true;
                    break;
                }
                info.edge_class = cls.id;
                info.index = static_cast<int>(cls.slots.size());
                info.aligned = p[0] < p[1];
                cls.slots.push_back({t, e, p});

                const FaceGluing& g = glue(t, p[2]);
                p = g.perm * p * Perm4(0, 1, 3, 2);
                t = g.tet;
            }
            edges_.push_back(std::move(cls));
        }
    }
}

namespace {
int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}
}  // namespace

void IdealTriangulation::build_vertices() {
    const int n = 4 * tet_count_;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (int t = 0; t < tet_count_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = glue(t, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                int r1 = find_root(parent, 4 * t + v);
                int r2 = find_root(parent, 4 * g.tet + g.perm[v]);
                if (r1 != r2) parent[static_cast<std::size_t>(std::max(r1, r2))] = std::min(r1, r2);
            }
        }
    }
    corner_class_.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> root_to_class(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int r = find_root(parent, i);
        auto& cls = root_to_class[static_cast<std::size_t>(r)];
        if (cls < 0) {
            cls = static_cast<int>(vertices_.size());
            vertices_.push_back(VertexClass{cls, {}});
        }
        corner_class_[static_cast<std::size_t>(i)] = cls;
        vertices_[static_cast<std::size_t>(cls)].corners.push_back(Corner{i / 4, i % 4});
    }
}

void IdealTriangulation::build_orientation() {
    std::vector<int> sign(static_cast<std::size_t>(tet_count_), 0);
    for (int root = 0; root < tet_count_; ++root) {
        if (sign[static_cast<std::size_t>(root)] != 0) continue;
        sign[static_cast<std::size_t>(root)] = 1;
        std::queue<int> todo;
        todo.push(root);
        while (!todo.empty()) {
            const int t = todo.front();
            todo.pop();
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = glue(t, f);
                // Orientation-compatible gluings reverse the induced face orientation.
                const int want = -sign[static_cast<std::size_t>(t)] * g.perm.sign();
                int& s = sign[static_cast<std::size_t>(g.tet)];
                if (s == 0) {
                    s = want;
                    todo.push(g.tet);
                } else if (s != want) {
                    orientation_.reset();
                    return;
                }
            }
        }
    }
    orientation_ = std::move(sign);
}

const PeripheralSpec* IdealTriangulation::peripheral_for(int cusp) const {
    for (const auto& p : peripheral_)
        if (p.cusp == cusp) return &p;
    return nullptr;
}

IdealTriangulation IdealTriangulation::doubled() const {
    std::vector<std::optional<FaceGluing>> g(static_cast<std::size_t>(8 * tet_count_));
    for (int copy = 0; copy < 2; ++copy) {
        for (int t = 0; t < tet_count_; ++t) {
            for (int f = 0; f < 4; ++f) {
                FaceGluing fg = glue(t, f);
                fg.tet += copy * tet_count_;
                g[static_cast<std::size_t>(4 * (t + copy * tet_count_) + f)] = fg;
            }
        }
    }
    std::vector<PeripheralSpec> per = peripheral_;
    const int cusps = static_cast<int>(vertices_.size());
    for (const auto& p : peripheral_) {
        PeripheralSpec q = p;
        q.cusp += cusps;
        per.push_back(std::move(q));
    }
    return IdealTriangulation(2 * tet_count_, std::move(g), std::move(per));
}

std::string IdealTriangulation::to_text() const {
    std::ostringstream out;
    out << "tets: " << tet_count_ << '\n';
    for (int t = 0; t < tet_count_; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = glue(t, f);
            if (g.tet < t || (g.tet == t && g.face < f)) continue;
            out << "glue " << t << ' ' << f << " -> " << g.tet << ' ' << g.face << " [" << g.perm.str() << "]\n";
        }
    }
    for (const auto& p : peripheral_) {
        out << "peripheral " << p.cusp << " meridian";
        for (long w : p.meridian) out << ' ' << w;
        out << " longitude";
        for (long w : p.longitude) out << ' ' << w;
        out << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    // '[', ']' and "->" are separators as well as whitespace.
    std::string buf;
    buf.reserve(line.size());
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (ch == '[' || ch == ']' || ch == ',') {
            buf += ' ';
            buf += ch;
            buf += ' ';
        } else if (ch == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            buf += " -> ";
            ++i;
        } else {
            buf += ch;
        }
    }
    std::istringstream in(buf);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

long to_long(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size()) throw ParseError("expected an integer, got '" + s + "'", line);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("expected an integer, got '" + s + "'", line);
    }
}

}  // namespace

IdealTriangulation parse_triangulation(std::string_view text) {
    std::optional<int> tets;
    std::vector<std::optional<FaceGluing>> gluings;
    std::vector<PeripheralSpec> peripheral;
    std::vector<int> first_line;

    std::istringstream in{std::string(text)};
    int lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto tok = tokenize(raw);
        if (tok.empty()) continue;

        if (tok[0] == "tets:" || (tok[0] == "tets" && tok.size() == 3 && tok[1] == ":")) {
            if (tets) throw ParseError("duplicate 'tets:' line", lineno);
            const long n = to_long(tok.back(), lineno);
            if (tok.size() != (tok[0] == "tets:" ? 2u : 3u)) throw ParseError("malformed 'tets:' line", lineno);
            if (n < 1) throw ParseError("triangulation needs at least one tetrahedron", lineno);
            tets = static_cast<int>(n);
            gluings.assign(static_cast<std::size_t>(4 * n), std::nullopt);
            first_line.assign(static_cast<std::size_t>(4 * n), 0);
        } else if (tok[0] == "glue") {
            if (!tets) throw ParseError("'glue' before 'tets:'", lineno);
            // glue t f -> t' f' [ p0 p1 p2 p3 ]
            if (tok.size() != 12 || tok[3] != "->" || tok[6] != "[" || tok[11] != "]")
                throw ParseError("malformed glue line", lineno);
            const long t = to_long(tok[1], lineno), f = to_long(tok[2], lineno);
            const long t2 = to_long(tok[4], lineno), f2 = to_long(tok[5], lineno);
            if (t < 0 || t >= *tets || t2 < 0 || t2 >= *tets || f < 0 || f > 3 || f2 < 0 || f2 > 3)
                throw ParseError("glue line references a nonexistent face", lineno);
            const Perm4 p(static_cast<int>(to_long(tok[7], lineno)), static_cast<int>(to_long(tok[8], lineno)),
                          static_cast<int>(to_long(tok[9], lineno)), static_cast<int>(to_long(tok[10], lineno)));
            if (!p.valid()) throw ParseError("vertex correspondence is not a permutation of 0..3", lineno);
            const FaceGluing g{static_cast<int>(t2), static_cast<int>(f2), p};
            auto& slot = gluings[static_cast<std::size_t>(4 * t + f)];
            if (slot) {
                if (slot->tet != g.tet || slot->face != g.face)
                    throw ParseError("face glued twice: face " + std::to_string(t) + ":" + std::to_string(f) +
                                         " (first on line " +
                                         std::to_string(first_line[static_cast<std::size_t>(4 * t + f)]) + ")",
                                     lineno);
                if (slot->perm != g.perm) throw ParseError("non-involutive gluing", lineno);
            } else {
                slot = g;
                first_line[static_cast<std::size_t>(4 * t + f)] = lineno;
            }
            // The mirror slot must either be empty or agree.
            auto& mirror = gluings[static_cast<std::size_t>(4 * t2 + f2)];
            const FaceGluing back{static_cast<int>(t), static_cast<int>(f), p.inverse()};
            if (mirror) {
                if (mirror->tet != back.tet || mirror->face != back.face)
                    throw ParseError("face glued twice: face " + std::to_string(t2) + ":" + std::to_string(f2), lineno);
                if (mirror->perm != back.perm) throw ParseError("non-involutive gluing", lineno);
            } else if (!(t2 == t && f2 == f)) {
                mirror = back;
                first_line[static_cast<std::size_t>(4 * t2 + f2)] = lineno;
            }
        } else if (tok[0] == "peripheral") {
            PeripheralSpec spec;
            if (tok.size() < 4) throw ParseError("malformed peripheral line", lineno);
            spec.cusp = static_cast<int>(to_long(tok[1], lineno));
            std::size_t i = 2;
            if (tok[i] != "meridian") throw ParseError("expected 'meridian'", lineno);
            for (++i; i < tok.size() && tok[i] != "longitude"; ++i) spec.meridian.push_back(to_long(tok[i], lineno));
            if (i == tok.size()) throw ParseError("expected 'longitude'", lineno);
            for (++i; i < tok.size(); ++i) spec.longitude.push_back(to_long(tok[i], lineno));
            if (spec.meridian.empty() || spec.meridian.size() != spec.longitude.size())
                throw ParseError("peripheral curves need equal-length nonempty weight lists", lineno);
            for (const auto& q : peripheral)
                if (q.cusp == spec.cusp) throw ParseError("duplicate peripheral line for cusp", lineno);
            peripheral.push_back(std::move(spec));
        } else {
            throw ParseError("unknown directive '" + tok[0] + "'", lineno);
        }
    }
    if (!tets) throw ParseError("missing 'tets:' line");
    try {
        return IdealTriangulation(*tets, std::move(gluings), std::move(peripheral));
    } catch (const TriangulationError& e) {
        throw ParseError(e.what());
    }
}

IdealTriangulation load_triangulation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_triangulation(buf.str());
}

const std::vector<EdgeClass>& edge_classes(const IdealTriangulation& tri) { return tri.edges(); }

ValidationReport validate(const IdealTriangulation& tri) {
    ValidationReport report;
    for (const auto& e : tri.edges()) {
        if (e.reversed)
            report.violations.push_back({ViolationKind::ReversedEdge, e.id,
                                         "edge " + std::to_string(e.id) + " is identified with itself in reverse"});
        if (e.valence() < 3)
            report.violations.push_back({ViolationKind::LowValence, e.id,
                                         "edge valence < 3: edge " + std::to_string(e.id) + " has valence " +
                                             std::to_string(e.valence())});
    }
    if (!tri.orientable())
        report.violations.push_back({ViolationKind::NonOrientable, -1, "triangulation is not orientable"});
    for (const auto& link : vertex_links(tri)) {
        if (!link.is_torus()) {
            std::string why = link.orientable() ? "euler characteristic " + std::to_string(link.euler_characteristic())
                                                : "non-orientable link";
            if (link.orientable() && link.euler_characteristic() == 2) why += " (sphere link)";
            report.violations.push_back({ViolationKind::NonTorusCusp, link.vertex(),
                                         "non-torus cusp: vertex " + std::to_string(link.vertex()) + " has " + why});
        }
    }
    report.assumptions.push_back("edges are assumed essential (not nullhomotopic); this is not checked");
    return report;
}

}  // namespace spun

#include "spun/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace spun {

long PreNormalPattern::edge_weight() const {
    long w = 0;
    for (int n : points) w += n;
    return w;
}

Piece canonical_piece(Piece p) {
    const std::size_t m = p.steps.size();
    if (m == 0) return p;
    std::vector<Step> back(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Step& arc = p.steps[(m - j) % m];
        const Step& end = p.steps[m - 1 - j];
        back[j] = Step{arc.face, end.slot, end.pos};
    }
    std::vector<Step> best = p.steps;
    for (const auto* word : {&p.steps, &back}) {
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<Step> rot(word->begin() + static_cast<std::ptrdiff_t>(r), word->end());
            rot.insert(rot.end(), word->begin(), word->begin() + static_cast<std::ptrdiff_t>(r));
            if (rot < best) best = std::move(rot);
        }
    }
    p.steps = std::move(best);
    return p;
}

std::array<int, 2> canonical_face(const IdealTriangulation& tri, int tet, int face) {
    const FaceGluing& g = tri.glue(tet, face);
    if (g.tet < tet || (g.tet == tet && g.face < face)) return {g.tet, g.face};
    return {tet, face};
}

EdgePoint point_across(const IdealTriangulation& tri, int tet, int face, const EdgePoint& p) {
    const FaceGluing& g = tri.glue(tet, face);
    const auto& ends = kEdgeVertices[static_cast<std::size_t>(p.slot)];
    return {edge_number(g.perm[ends[0]], g.perm[ends[1]]), p.pos};
}

namespace {

Arc make_arc(EdgePoint a, EdgePoint b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

std::size_t face_key(int tet, int face) { return static_cast<std::size_t>(4 * tet + face); }

// Arcs on (tet, face) in that tetrahedron's labels.
std::vector<Arc> arcs_on_side(const IdealTriangulation& tri, const std::vector<std::vector<Arc>>& arcs, int tet,
                              int face) {
    const auto c = canonical_face(tri, tet, face);
    const auto& src = arcs[face_key(c[0], c[1])];
    if (c[0] == tet && c[1] == face) return src;
    std::vector<Arc> out;
    for (const Arc& a : src)
        out.push_back(make_arc(point_across(tri, c[0], c[1], a[0]), point_across(tri, c[0], c[1], a[1])));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Arc> side_arcs(const IdealTriangulation& tri, const std::vector<std::vector<Arc>>& arcs, int tet,
                           int face) {
    return arcs_on_side(tri, arcs, tet, face);
}

std::vector<std::vector<Arc>> face_arcs(const IdealTriangulation& tri, const PreNormalPattern& p) {
    std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(4 * tri.size()));
    for (const Piece& piece : p.pieces) {
        const std::size_t m = piece.steps.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Step& s = piece.steps[i];
            const auto c = canonical_face(tri, piece.tet, s.face);
            if (c[0] != piece.tet || c[1] != s.face) continue;
            arcs[face_key(piece.tet, s.face)].push_back(make_arc(piece.steps[(i + m - 1) % m].point(), s.point()));
        }
    }
    for (auto& a : arcs) std::sort(a.begin(), a.end());
    return arcs;
}

PreNormalPattern from_face_arcs(const IdealTriangulation& tri, std::vector<int> points,
                                const std::vector<std::vector<Arc>>& arcs, std::vector<FaceCircle> circles,
                                int next_circle_id) {
    PreNormalPattern out;
    out.points = std::move(points);
    out.circles = std::move(circles);
    out.next_circle_id = next_circle_id;

    for (int t = 0; t < tri.size(); ++t) {
        struct Incidence {
            int face;
            EdgePoint other;
        };
        std::map<EdgePoint, std::vector<Incidence>> at;
        for (int f = 0; f < 4; ++f) {
            for (const Arc& a : arcs_on_side(tri, arcs, t, f)) {
                at[a[0]].push_back({f, a[1]});
                at[a[1]].push_back({f, a[0]});
            }
        }
        for (const auto& [pt, inc] : at) {
            if (inc.size() != 2 || inc[0].face == inc[1].face)
                throw PatternError("edge point " + std::to_string(pt.slot) + "." + std::to_string(pt.pos) +
                                   " of tetrahedron " + std::to_string(t) + " does not have one arc on each face");
        }
        std::set<EdgePoint> seen;
        for (const auto& [start, inc0] : at) {
            if (seen.count(start)) continue;
            Piece piece{t, {}};
            EdgePoint cur = start;
            int face = std::min(inc0[0].face, inc0[1].face);
            while (true) {
                seen.insert(cur);
                const auto& inc = at[cur];
                const Incidence& go = inc[0].face == face ? inc[0] : inc[1];
                piece.steps.push_back({go.face, go.other.slot, go.other.pos});
                cur = go.other;
                if (cur == start) break;
                const auto& next = at[cur];
                face = next[0].face == go.face ? next[1].face : next[0].face;
            }
            out.pieces.push_back(canonical_piece(std::move(piece)));
        }
    }
    std::sort(out.pieces.begin(), out.pieces.end());
    return out;
}


namespace {

// Position of an edge point on the boundary circle of a face, walking the
// face's vertices a < b < c in the order a, b, c.
std::pair<int, int> perimeter(const IdealTriangulation& tri, const PreNormalPattern& p, int tet, int face,
                              const EdgePoint& x) {
    std::array<int, 3> v{};
    int n = 0;
    for (int u = 0; u < 4; ++u)
        if (u != face) v[static_cast<std::size_t>(n++)] = u;
    const auto& ends = kEdgeVertices[static_cast<std::size_t>(x.slot)];
    const SlotInfo& info = tri.slot(tet, x.slot);
    const int count = p.points[static_cast<std::size_t>(info.edge_class)];
    const int from_low = info.aligned ? x.pos : count - 1 - x.pos;
    for (int k = 0; k < 3; ++k) {
        const int a = v[static_cast<std::size_t>(k)], b = v[static_cast<std::size_t>((k + 1) % 3)];
        if (a == ends[0] && b == ends[1]) return {k, from_low};
        if (a == ends[1] && b == ends[0]) return {k, count - 1 - from_low};
    }
    return {-1, -1};
}

bool chords_cross(std::vector<std::pair<std::pair<int, int>, int>> ends) {
    std::sort(ends.begin(), ends.end());
    std::vector<int> stack;
    std::set<int> open;
    for (const auto& [spot, chord] : ends) {
        if (!open.count(chord)) {
            open.insert(chord);
            stack.push_back(chord);
        } else {
            if (stack.empty() || stack.back() != chord) return true;
            stack.pop_back();
        }
    }
    return false;
}

std::string where(int tet, int face) { return std::to_string(tet) + ":" + std::to_string(face); }

}  // namespace

std::optional<std::string> consistency_failure(const IdealTriangulation& tri, const PreNormalPattern& p) {
    if (p.points.size() != tri.edges().size()) return "edge point counts do not match the edge classes";

    for (const Piece& piece : p.pieces) {
        if (piece.tet < 0 || piece.tet >= tri.size()) return "piece in nonexistent tetrahedron " + std::to_string(piece.tet);
        if (piece.steps.size() < 2) return "piece in tetrahedron " + std::to_string(piece.tet) + " has fewer than 2 steps";
        const std::size_t m = piece.steps.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Step& s = piece.steps[i];
            const Step& next = piece.steps[(i + 1) % m];
            if (s.face < 0 || s.face > 3 || s.slot < 0 || s.slot > 5 || s.pos < 0) return "malformed step in tetrahedron " + std::to_string(piece.tet);
            if (!edge_on_face(s.slot, s.face)) return "step " + where(piece.tet, s.face) + " names an edge not on that face";
            if (next.face == s.face) return "consecutive arcs on the same face " + where(piece.tet, s.face);
            if (!edge_on_face(s.slot, next.face)) return "consecutive arcs in tetrahedron " + std::to_string(piece.tet) + " do not meet at an edge";
            const int cls = tri.slot(piece.tet, s.slot).edge_class;
            if (s.pos >= p.points[static_cast<std::size_t>(cls)]) return "edge position beyond the count of edge class " + std::to_string(cls);
        }
    }

    // Every edge point is met exactly once in every wedge of its edge.
    std::map<std::array<int, 3>, int> met;
    for (const Piece& piece : p.pieces)
        for (const Step& s : piece.steps) ++met[{piece.tet, s.slot, s.pos}];
    for (int t = 0; t < tri.size(); ++t) {
        for (int e = 0; e < 6; ++e) {
            const int n = p.points[static_cast<std::size_t>(tri.slot(t, e).edge_class)];
            for (int x = 0; x < n; ++x) {
                const auto it = met.find({t, e, x});
                const int k = it == met.end() ? 0 : it->second;
                if (k != 1)
                    return "edge point " + std::to_string(e) + "." + std::to_string(x) + " of tetrahedron " +
                           std::to_string(t) + " is met " + std::to_string(k) + " times";
            }
        }
    }

    // Arcs agree across each face pair.
    std::map<std::array<int, 2>, std::vector<Arc>> side;
    for (const Piece& piece : p.pieces) {
        const std::size_t m = piece.steps.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Step& s = piece.steps[i];
            side[{piece.tet, s.face}].push_back(make_arc(piece.steps[(i + m - 1) % m].point(), s.point()));
        }
    }
    for (auto& [k, arcs] : side) std::sort(arcs.begin(), arcs.end());
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue(t, f);
            std::vector<Arc> mapped;
            for (const Arc& a : side[{t, f}])
                mapped.push_back(make_arc(point_across(tri, t, f, a[0]), point_across(tri, t, f, a[1])));
            std::sort(mapped.begin(), mapped.end());
            if (mapped != side[{g.tet, g.face}]) return "arcs on face " + where(t, f) + " do not match face " + where(g.tet, g.face);
        }
    }

    for (const auto& [k, arcs] : side) {
        std::vector<std::pair<std::pair<int, int>, int>> ends;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            for (const EdgePoint& x : arcs[i]) ends.push_back({perimeter(tri, p, k[0], k[1], x), static_cast<int>(i)});
        if (chords_cross(ends)) return "arcs cross on face " + where(k[0], k[1]);
    }

    std::set<int> ids;
    for (std::size_t i = 0; i < p.circles.size(); ++i) {
        const FaceCircle& c = p.circles[i];
        if (c.tet < 0 || c.tet >= tri.size() || c.face < 0 || c.face > 3) return "circle on nonexistent face";
        const auto cf = canonical_face(tri, c.tet, c.face);
        if (cf[0] != c.tet || cf[1] != c.face) return "circle " + std::to_string(c.id) + " not recorded on the canonical face side";
        if (!ids.insert(c.id).second) return "duplicate circle id " + std::to_string(c.id);
        if (c.depth < 0) return "negative circle depth";
        if (c.parent < 0 && c.depth != 0) return "circle " + std::to_string(c.id) + " has depth but no enclosing circle";
        if (c.parent >= 0) {
            auto it = std::find_if(p.circles.begin(), p.circles.end(), [&](const FaceCircle& o) { return o.id == c.parent; });
            if (it == p.circles.end() || it->tet != c.tet || it->face != c.face || it->depth != c.depth - 1)
                return "circle " + std::to_string(c.id) + " has an inconsistent enclosing circle";
        }
    }
    return std::nullopt;
}

void check_consistency(const IdealTriangulation& tri, const PreNormalPattern& p) {
    if (auto why = consistency_failure(tri, p)) throw PatternError(*why);
}


namespace {

std::vector<int> counts_from_pieces(const IdealTriangulation& tri, const std::vector<Piece>& pieces) {
    std::vector<int> n(tri.edges().size(), 0);
    for (const Piece& piece : pieces) {
        if (piece.tet < 0 || piece.tet >= tri.size()) continue;
        for (const Step& s : piece.steps) {
            if (s.slot < 0 || s.slot > 5) continue;
            auto& c = n[static_cast<std::size_t>(tri.slot(piece.tet, s.slot).edge_class)];
            c = std::max(c, s.pos + 1);
        }
    }
    return n;
}

int parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ParseError("expected an integer, got '" + s + "'", line);
}

void emit_circles(std::ostringstream& out, const std::vector<FaceCircle>& circles, int parent, int tet, int face) {
    for (const FaceCircle& c : circles) {
        if (c.parent != parent || c.tet != tet || c.face != face) continue;
        out << "circle " << c.tet << ' ' << c.face << ' ' << c.depth << '\n';
        emit_circles(out, circles, c.id, tet, face);
    }
}

}  // namespace

PreNormalPattern parse_pattern(std::string_view text, const IdealTriangulation& tri) {
    PreNormalPattern p;
    std::istringstream in{std::string(text)};
    int lineno = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok[0] == "piece") {
            if (tok.size() < 4) throw ParseError("a piece needs a tetrahedron and at least 2 steps", lineno);
            Piece piece;
            piece.tet = parse_int(tok[1], lineno);
            if (piece.tet < 0 || piece.tet >= tri.size()) throw ParseError("piece in nonexistent tetrahedron", lineno);
            for (std::size_t i = 2; i < tok.size(); ++i) {
                const auto d1 = tok[i].find('.');
                const auto d2 = d1 == std::string::npos ? d1 : tok[i].find('.', d1 + 1);
                if (d2 == std::string::npos) throw ParseError("step must be <face>.<slot>.<pos>, got '" + tok[i] + "'", lineno);
                piece.steps.push_back({parse_int(tok[i].substr(0, d1), lineno),
                                       parse_int(tok[i].substr(d1 + 1, d2 - d1 - 1), lineno),
                                       parse_int(tok[i].substr(d2 + 1), lineno)});
            }
            p.pieces.push_back(std::move(piece));
        } else if (tok[0] == "circle") {
            if (tok.size() != 4) throw ParseError("expected 'circle <tet> <face> <depth>'", lineno);
            const int t = parse_int(tok[1], lineno), f = parse_int(tok[2], lineno);
            if (t < 0 || t >= tri.size() || f < 0 || f > 3) throw ParseError("circle on nonexistent face", lineno);
            const auto c = canonical_face(tri, t, f);
            FaceCircle circle{p.next_circle_id++, c[0], c[1], parse_int(tok[3], lineno), -1};
            if (circle.depth < 0) throw ParseError("negative circle depth", lineno);
            if (circle.depth > 0) {
                for (auto it = p.circles.rbegin(); it != p.circles.rend(); ++it) {
                    if (it->tet == c[0] && it->face == c[1] && it->depth == circle.depth - 1) {
                        circle.parent = it->id;
                        break;
                    }
                }
                if (circle.parent < 0) throw ParseError("nested circle without an enclosing circle", lineno);
            }
            p.circles.push_back(circle);
        } else {
            throw ParseError("unknown directive '" + tok[0] + "'", lineno);
        }
    }
    p.points = counts_from_pieces(tri, p.pieces);
    for (auto& piece : p.pieces) piece = canonical_piece(std::move(piece));
    std::sort(p.pieces.begin(), p.pieces.end());
    check_consistency(tri, p);
    return p;
}

PreNormalPattern load_pattern(const std::string& path, const IdealTriangulation& tri) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern(buf.str(), tri);
}

std::string format_pattern(const PreNormalPattern& p) {
    std::ostringstream out;
    for (const Piece& piece : p.pieces) {
        out << "piece " << piece.tet;
        for (const Step& s : piece.steps) out << ' ' << s.face << '.' << s.slot << '.' << s.pos;
        out << '\n';
    }
    std::set<std::array<int, 2>> faces;
    for (const FaceCircle& c : p.circles) faces.insert({c.tet, c.face});
    for (const auto& f : faces) emit_circles(out, p.circles, -1, f[0], f[1]);
    return out.str();
}

PreNormalPattern pattern_from_surface(const IdealTriangulation& tri, const SurfaceVector& v) {
    check_dimensions(tri, v);
    if (!closed_matching_check(tri, v)) throw PatternError("surface vector does not match across faces");
    if (!is_admissible(v)) throw PatternError("surface vector has two quad types in one tetrahedron");

    PreNormalPattern p;
    for (const auto& e : tri.edges())
        p.points.push_back(static_cast<int>(edge_crossings(v, e.slots.front().tet, e.slots.front().edge)));

    for (int t = 0; t < tri.size(); ++t) {
        const auto& tv = v.tri[static_cast<std::size_t>(t)];
        // Point on the edge from x to y at distance d from x.
        auto point = [&](int x, int y, long d) {
            const int s = edge_number(x, y);
            const SlotInfo& info = tri.slot(t, s);
            const int n = p.points[static_cast<std::size_t>(info.edge_class)];
            const long local = x < y ? d : n - 1 - d;
            return EdgePoint{s, static_cast<int>(info.aligned ? local : n - 1 - local)};
        };
        auto cycle = [&](const std::vector<EdgePoint>& pts) {
            Piece piece{t, {}};
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const auto& a = kEdgeVertices[static_cast<std::size_t>(pts[(i + pts.size() - 1) % pts.size()].slot)];
                const auto& b = kEdgeVertices[static_cast<std::size_t>(pts[i].slot)];
                int face = 0 + 1 + 2 + 3;
                std::set<int> used{a[0], a[1], b[0], b[1]};
                for (int u : used) face -= u;
                piece.steps.push_back({face, pts[i].slot, pts[i].pos});
            }
            p.pieces.push_back(canonical_piece(std::move(piece)));
        };

        for (int c = 0; c < 4; ++c) {
            std::vector<int> others;
            for (int u = 0; u < 4; ++u)
                if (u != c) others.push_back(u);
            for (long d = 0; d < tv[static_cast<std::size_t>(c)]; ++d)
                cycle({point(c, others[0], d), point(c, others[1], d), point(c, others[2], d)});
        }
        for (int q = 0; q < 3; ++q) {
            const long k = v.quad[static_cast<std::size_t>(t)][static_cast<std::size_t>(q)];
            const int a = kEdgeVertices[static_cast<std::size_t>(q)][0], b = kEdgeVertices[static_cast<std::size_t>(q)][1];
            const int c = kEdgeVertices[static_cast<std::size_t>(5 - q)][0], d = kEdgeVertices[static_cast<std::size_t>(5 - q)][1];
            for (long i = 0; i < k; ++i) {
                auto at = [&](int x, int y) { return point(x, y, tv[static_cast<std::size_t>(x)] + i); };
                cycle({at(a, c), at(a, d), at(b, d), at(b, c)});
            }
        }
    }
    std::sort(p.pieces.begin(), p.pieces.end());
    check_consistency(tri, p);
    return p;
}


std::optional<PreNormalPattern> finger_move(const IdealTriangulation& tri, const PreNormalPattern& p, int tet,
                                            int face, int arc_index, int slot, int gap) {
    const auto cf = canonical_face(tri, tet, face);
    if (cf[0] != tet || cf[1] != face) throw std::invalid_argument("finger_move needs the canonical side of a face");
    if (!edge_on_face(slot, face)) throw std::invalid_argument("finger edge is not on the face");
    auto arcs = face_arcs(tri, p);
    auto& here = arcs[static_cast<std::size_t>(4 * tet + face)];
    if (arc_index < 0 || arc_index >= static_cast<int>(here.size())) throw std::invalid_argument("no such arc");

    const SlotInfo& info = tri.slot(tet, slot);
    const int cls = info.edge_class;
    const int n = p.points[static_cast<std::size_t>(cls)];
    if (gap < 0 || gap > n) throw std::invalid_argument("gap out of range");
    const int x = info.aligned ? gap : n - gap;

    const Arc finger = here[static_cast<std::size_t>(arc_index)];
    here.erase(here.begin() + arc_index);

    std::vector<int> points = p.points;
    points[static_cast<std::size_t>(cls)] += 2;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            auto& list = arcs[static_cast<std::size_t>(4 * t + f)];
            for (Arc& a : list)
                for (EdgePoint& e : a)
                    if (tri.slot(t, e.slot).edge_class == cls && e.pos >= x) e.pos += 2;
            // A bigon arc at every other place the edge meets this face.
            const auto c = canonical_face(tri, t, f);
            if (c[0] != t || c[1] != f) continue;
            for (int s = 0; s < 6; ++s) {
                if (!edge_on_face(s, f) || tri.slot(t, s).edge_class != cls) continue;
                if (t == tet && f == face && s == slot) continue;
                list.push_back({EdgePoint{s, x}, EdgePoint{s, x + 1}});
            }
        }
    }
    Arc moved = finger;
    for (EdgePoint& e : moved)
        if (tri.slot(tet, e.slot).edge_class == cls && e.pos >= x) e.pos += 2;

    for (int swap = 0; swap < 2; ++swap) {
        auto trial = arcs;
        auto& list = trial[static_cast<std::size_t>(4 * tet + face)];
        const EdgePoint near{slot, swap ? x + 1 : x}, far{slot, swap ? x : x + 1};
        list.push_back(make_arc(moved[0], near));
        list.push_back(make_arc(far, moved[1]));
        for (auto& l : trial) std::sort(l.begin(), l.end());
        try {
            PreNormalPattern out = from_face_arcs(tri, points, trial, p.circles, p.next_circle_id);
            if (!consistency_failure(tri, out)) return out;
        } catch (const PatternError&) {
        }
    }
    return std::nullopt;
}

PreNormalPattern add_circle(const IdealTriangulation& tri, PreNormalPattern p, int tet, int face,
                            std::optional<int> parent) {
    const auto c = canonical_face(tri, tet, face);
    FaceCircle circle{p.next_circle_id++, c[0], c[1], 0, -1};
    if (parent) {
        auto it = std::find_if(p.circles.begin(), p.circles.end(), [&](const FaceCircle& o) { return o.id == *parent; });
        if (it == p.circles.end() || it->tet != c[0] || it->face != c[1])
            throw std::invalid_argument("enclosing circle is not on that face");
        circle.depth = it->depth + 1;
        circle.parent = *parent;
    }
    p.circles.push_back(circle);
    return p;
}

}  // namespace spun

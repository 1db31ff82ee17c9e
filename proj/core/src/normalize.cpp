#include "spun/normalize.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace spun {

std::vector<CircleInfo> find_face_circles(const IdealTriangulation& tri, const PreNormalPattern& p) {
    check_consistency(tri, p);
    std::set<int> parents;
    for (const FaceCircle& c : p.circles)
        if (c.parent >= 0) parents.insert(c.parent);
    std::vector<CircleInfo> out;
    for (const FaceCircle& c : p.circles) out.push_back({c, parents.count(c.id) == 0});
    std::sort(out.begin(), out.end(), [](const CircleInfo& a, const CircleInfo& b) {
        return std::tuple(a.circle.tet, a.circle.face, -a.circle.depth, a.circle.id) <
               std::tuple(b.circle.tet, b.circle.face, -b.circle.depth, b.circle.id);
    });
    return out;
}

PreNormalPattern compress_circle(const IdealTriangulation& tri, const PreNormalPattern& p, int circle_id) {
    if (p.circles.empty()) throw PatternError("pattern has no face circles");
    auto it = std::find_if(p.circles.begin(), p.circles.end(), [&](const FaceCircle& c) { return c.id == circle_id; });
    if (it == p.circles.end()) throw PatternError("no circle with id " + std::to_string(circle_id));
    for (const FaceCircle& c : p.circles)
        if (c.parent == circle_id) throw PatternError("circle " + std::to_string(circle_id) + " is not innermost");
    (void)tri;
    PreNormalPattern out = p;
    out.circles.erase(out.circles.begin() + (it - p.circles.begin()));
    return out;
}

std::vector<CancelingPair> find_canceling_pairs(const IdealTriangulation& tri, const PreNormalPattern& p) {
    const auto arcs = face_arcs(tri, p);
    std::vector<CancelingPair> all;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            for (const Arc& a : arcs[static_cast<std::size_t>(4 * t + f)]) {
                if (a[0].slot != a[1].slot) continue;
                const int e = tri.slot(t, a[0].slot).edge_class;
                const int x = std::min(a[0].pos, a[1].pos), y = std::max(a[0].pos, a[1].pos);
                all.push_back({e, x, y, t, f, a[0].slot, y == x + 1});
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const CancelingPair& a, const CancelingPair& b) {
        return std::tuple(a.edge_class, a.y - a.x, a.x, a.tet, a.face, a.slot) <
               std::tuple(b.edge_class, b.y - b.x, b.x, b.tet, b.face, b.slot);
    });
    std::vector<CancelingPair> out;
    std::set<std::tuple<int, int, int>> seen;
    for (const CancelingPair& c : all)
        if (seen.insert({c.edge_class, c.x, c.y}).second) out.push_back(c);
    return out;
}

bool is_normal(const IdealTriangulation& tri, const PreNormalPattern& p) {
    (void)tri;
    if (!p.circles.empty()) return false;
    for (const Piece& piece : p.pieces) {
        std::set<int> slots;
        for (const Step& s : piece.steps) slots.insert(s.slot);
        if (slots.size() != piece.steps.size()) return false;
        if (piece.length() == 3) {
            bool corner = false;
            for (int v = 0; v < 4; ++v)
                corner = corner || std::all_of(slots.begin(), slots.end(), [&](int s) { return edge_has_vertex(s, v); });
            if (!corner) return false;
        } else if (piece.length() == 4) {
            bool quad = false;
            for (int q = 0; q < 3; ++q) quad = quad || (!slots.count(q) && !slots.count(5 - q));
            if (!quad) return false;
        } else {
            return false;
        }
    }
    return true;
}

SurfaceVector to_surface_vector(const IdealTriangulation& tri, const PreNormalPattern& p) {
    if (!is_normal(tri, p)) throw PatternError("pattern is not normal");
    SurfaceVector v(tri.size());
    for (const Piece& piece : p.pieces) {
        std::set<int> slots;
        for (const Step& s : piece.steps) slots.insert(s.slot);
        const auto t = static_cast<std::size_t>(piece.tet);
        if (piece.length() == 3) {
            for (int u = 0; u < 4; ++u)
                if (std::all_of(slots.begin(), slots.end(), [&](int s) { return edge_has_vertex(s, u); }))
                    ++v.tri[t][static_cast<std::size_t>(u)];
        } else {
            for (int q = 0; q < 3; ++q)
                if (!slots.count(q)) ++v.quad[t][static_cast<std::size_t>(q)];
        }
    }
    return v;
}

namespace {

struct Occurrence {
    int tet = 0;  // canonical side of the face
    int face = 0;
    int slot = 0;
};

// Faces met walking once around the edge class, each in canonical labels.
std::vector<Occurrence> occurrences(const IdealTriangulation& tri, int edge_class) {
    std::vector<Occurrence> out;
    for (const EdgeEmbedding& emb : tri.edges()[static_cast<std::size_t>(edge_class)].slots) {
        const int face = emb.vertices[2];
        const auto c = canonical_face(tri, emb.tet, face);
        int slot = emb.edge;
        if (c[0] != emb.tet || c[1] != face) slot = point_across(tri, emb.tet, face, {emb.edge, 0}).slot;
        out.push_back({c[0], c[1], slot});
    }
    return out;
}

}  // namespace

PreNormalPattern cancel_pair(const IdealTriangulation& tri, const PreNormalPattern& p, const CancelingPair& pair) {
    if (pair.y != pair.x + 1) throw PatternError("canceling pair is not innermost");
    const int e = pair.edge_class, x = pair.x;
    auto arcs = face_arcs(tri, p);
    const auto ring = occurrences(tri, e);
    const int k = static_cast<int>(ring.size());

    std::vector<bool> returns(static_cast<std::size_t>(k));
    int r = -1;
    for (int i = 0; i < k; ++i) {
        const Occurrence& o = ring[static_cast<std::size_t>(i)];
        const auto& list = arcs[static_cast<std::size_t>(4 * o.tet + o.face)];
        const Arc u{EdgePoint{o.slot, x}, EdgePoint{o.slot, x + 1}};
        returns[static_cast<std::size_t>(i)] = std::find(list.begin(), list.end(), u) != list.end();
        if (returns[static_cast<std::size_t>(i)] && o.tet == pair.tet && o.face == pair.face && o.slot == pair.slot)
            r = i;
    }
    if (r < 0) throw PatternError("no arc of the pattern joins the pair's crossings");

    // The run of returning arcs around the edge that contains r is pushed
    // across; every other face gets its two crossings joined.
    std::vector<bool> pushed(static_cast<std::size_t>(k), false);
    for (int step : {1, -1}) {
        for (int i = r, n = 0; n < k && returns[static_cast<std::size_t>(i)]; i = ((i + step) % k + k) % k, ++n)
            pushed[static_cast<std::size_t>(i)] = true;
    }

    std::vector<int> points = p.points;
    points[static_cast<std::size_t>(e)] -= 2;
    std::vector<FaceCircle> circles = p.circles;
    int next_id = p.next_circle_id;

    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            auto& list = arcs[static_cast<std::size_t>(4 * t + f)];
            std::vector<Arc> edges;
            for (const Arc& a : list) {
                bool drop = false;
                for (int i = 0; i < k; ++i) {
                    const Occurrence& o = ring[static_cast<std::size_t>(i)];
                    if (pushed[static_cast<std::size_t>(i)] && o.tet == t && o.face == f &&
                        a == Arc{EdgePoint{o.slot, x}, EdgePoint{o.slot, x + 1}})
                        drop = true;
                }
                if (!drop) edges.push_back(a);
            }
            const std::size_t real = edges.size();
            for (int i = 0; i < k; ++i) {
                const Occurrence& o = ring[static_cast<std::size_t>(i)];
                if (!pushed[static_cast<std::size_t>(i)] && o.tet == t && o.face == f)
                    edges.push_back({EdgePoint{o.slot, x}, EdgePoint{o.slot, x + 1}});
            }
            if (edges.size() == real && edges.size() == list.size()) continue;

            auto gone = [&](const EdgePoint& q) {
                return tri.slot(t, q.slot).edge_class == e && (q.pos == x || q.pos == x + 1);
            };
            std::map<EdgePoint, std::vector<std::size_t>> at;
            for (std::size_t i = 0; i < edges.size(); ++i)
                for (const EdgePoint& q : edges[i]) at[q].push_back(i);
            std::vector<bool> used(edges.size(), false);
            auto walk = [&](EdgePoint from, std::size_t via) {
                EdgePoint cur = from;
                while (true) {
                    used[via] = true;
                    const Arc& a = edges[via];
                    cur = a[0] == cur ? a[1] : a[0];
                    if (!gone(cur) || cur == from) return cur;
                    const auto& inc = at[cur];
                    via = inc[0] == via ? inc[1] : inc[0];
                }
            };
            std::vector<Arc> rebuilt;
            for (const auto& [q, inc] : at) {
                if (gone(q) || used[inc[0]]) continue;
                rebuilt.push_back({q, walk(q, inc[0])});
            }
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (used[i]) continue;
                walk(edges[i][0], i);
                circles.push_back(FaceCircle{next_id++, t, f, 0, -1});
            }
            list.clear();
            for (const Arc& a : rebuilt) list.push_back(a[1] < a[0] ? Arc{a[1], a[0]} : a);
        }
    }
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            auto& list = arcs[static_cast<std::size_t>(4 * t + f)];
            for (Arc& a : list)
                for (EdgePoint& q : a)
                    if (tri.slot(t, q.slot).edge_class == e && q.pos > x + 1) q.pos -= 2;
            std::sort(list.begin(), list.end());
        }
    }
    return from_face_arcs(tri, std::move(points), arcs, std::move(circles), next_id);
}

std::string Move::str() const {
    std::ostringstream out;
    if (kind == Kind::CompressCircle)
        out << "compress-circle face " << tet << ":" << face << " circle " << circle;
    else
        out << "cancel-pair edge " << edge_class << " positions " << x << " " << y;
    out << " weight " << weight_before << " -> " << weight_after;
    return out.str();
}

int MoveLedger::cancels() const {
    return static_cast<int>(
        std::count_if(moves.begin(), moves.end(), [](const Move& m) { return m.kind == Move::Kind::CancelPair; }));
}

int MoveLedger::compressions() const { return static_cast<int>(moves.size()) - cancels(); }

std::string MoveLedger::str() const {
    std::string out = std::string("# ") + kMoveAssumption + "\n";
    for (const Move& m : moves) out += m.str() + "\n";
    return out;
}

NormalizeResult normalize(const IdealTriangulation& tri, const PreNormalPattern& p, int max_steps) {
    NormalizeResult res;
    res.pattern = p;
    if (auto bad = consistency_failure(tri, p)) {
        res.failure = "inconsistent pattern: " + *bad;
        return res;
    }
    while (!is_normal(tri, res.pattern)) {
        if (static_cast<int>(res.ledger.moves.size()) >= max_steps) {
            res.failure = "max steps (" + std::to_string(max_steps) + ") exhausted";
            return res;
        }
        Move m;
        m.weight_before = res.pattern.edge_weight();
        const auto circles = find_face_circles(tri, res.pattern);
        if (!circles.empty()) {
            const FaceCircle& c = circles.front().circle;
            m.kind = Move::Kind::CompressCircle;
            m.tet = c.tet;
            m.face = c.face;
            m.circle = c.id;
            res.pattern = compress_circle(tri, res.pattern, c.id);
        } else {
            const auto pairs = find_canceling_pairs(tri, res.pattern);
            auto it = std::find_if(pairs.begin(), pairs.end(), [](const CancelingPair& c) { return c.innermost; });
            if (it == pairs.end()) {
                res.failure = "pattern is not normal but has no circle or canceling pair";
                return res;
            }
            m.kind = Move::Kind::CancelPair;
            m.tet = it->tet;
            m.face = it->face;
            m.edge_class = it->edge_class;
            m.x = it->x;
            m.y = it->y;
            res.pattern = cancel_pair(tri, res.pattern, *it);
        }
        m.weight_after = res.pattern.edge_weight();
        res.ledger.moves.push_back(m);
        if (auto bad = consistency_failure(tri, res.pattern)) {
            res.failure = "move " + m.str() + " broke consistency: " + *bad;
            return res;
        }
    }
    res.ok = true;
    res.vector = to_surface_vector(tri, res.pattern);
    return res;
}

}  // namespace spun

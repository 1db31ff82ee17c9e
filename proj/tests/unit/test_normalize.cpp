#include <gtest/gtest.h>

#include <map>

#include "../support/pattern_corpus.hpp"
#include "spun/normalize.hpp"

using namespace spun;

namespace {

const std::string kData = SPUN_TEST_DATA;

struct Fixture {
    IdealTriangulation tri;
    SurfaceVector link_vector;
    PreNormalPattern link;
    explicit Fixture(const std::string& name)
        : tri(load_triangulation(kData + "/" + name)),
          link_vector(vertex_link_vector(tri, 0)),
          link(pattern_from_surface(tri, link_vector)) {}
};

// First valid finger move found scanning faces, arcs, slots and gaps in order.
PreNormalPattern first_finger(const IdealTriangulation& tri, const PreNormalPattern& p) {
    const auto arcs = face_arcs(tri, p);
    for (int t = 0; t < tri.size(); ++t)
        for (int face = 0; face < 4; ++face)
            for (int a = 0; a < static_cast<int>(arcs[static_cast<std::size_t>(4 * t + face)].size()); ++a)
                for (int s = 0; s < 6; ++s) {
                    if (!edge_on_face(s, face)) continue;
                    const int n = p.points[static_cast<std::size_t>(tri.slot(t, s).edge_class)];
                    for (int g = 0; g <= n; ++g)
                        if (auto q = finger_move(tri, p, t, face, a, s, g)) return *q;
                }
    throw std::logic_error("no finger move");
}

bool same_surface(const PreNormalPattern& a, const PreNormalPattern& b) {
    return a.points == b.points && a.pieces == b.pieces && a.circles == b.circles;
}

}  // namespace

TEST(Normalize, CirclesInnermostFirst) {
    Fixture f("figure8.tri");
    auto p = add_circle(f.tri, f.link, 0, 1);
    const int outer = p.circles.back().id;
    p = add_circle(f.tri, p, 0, 1, outer);
    const int inner = p.circles.back().id;
    p = add_circle(f.tri, p, 1, 0);
    const auto found = find_face_circles(f.tri, p);
    ASSERT_EQ(found.size(), 3u);
    std::map<int, bool> innermost;
    for (const auto& c : found) innermost[c.circle.id] = c.innermost;
    EXPECT_FALSE(innermost.at(outer));
    EXPECT_TRUE(innermost.at(inner));
    for (std::size_t i = 0; i + 1 < found.size(); ++i) {
        const auto& a = found[i].circle;
        const auto& b = found[i + 1].circle;
        if (a.tet == b.tet && a.face == b.face) EXPECT_GE(a.depth, b.depth);
    }
}

TEST(Normalize, CompressCircleErrors) {
    Fixture f("figure8.tri");
    EXPECT_THROW(compress_circle(f.tri, f.link, 0), PatternError);
    auto p = add_circle(f.tri, f.link, 0, 2);
    const int outer = p.circles.back().id;
    p = add_circle(f.tri, p, 0, 2, outer);
    EXPECT_THROW(compress_circle(f.tri, p, outer), PatternError);
    EXPECT_THROW(compress_circle(f.tri, p, 42), PatternError);
    const auto once = compress_circle(f.tri, p, p.circles.back().id);
    EXPECT_EQ(once.circles.size(), 1u);
    EXPECT_EQ(once.pieces, f.link.pieces);
    EXPECT_EQ(compress_circle(f.tri, once, outer).circles.size(), 0u);
}

TEST(Normalize, IsNormal) {
    Fixture f("figure8.tri");
    EXPECT_TRUE(is_normal(f.tri, f.link));
    EXPECT_TRUE(is_normal(f.tri, pattern_from_surface(f.tri, f.link_vector.scaled(2))));
    EXPECT_FALSE(is_normal(f.tri, add_circle(f.tri, f.link, 0, 0)));
    const auto fingered = load_pattern(kData + "/figure8_finger.pat", f.tri);
    EXPECT_FALSE(is_normal(f.tri, fingered));
    EXPECT_THROW(to_surface_vector(f.tri, fingered), PatternError);
    EXPECT_EQ(to_surface_vector(f.tri, f.link), f.link_vector);
}

TEST(Normalize, FingerLeavesOneInnermostPair) {
    Fixture f("figure8.tri");
    const auto fingered = load_pattern(kData + "/figure8_finger.pat", f.tri);
    const auto pairs = find_canceling_pairs(f.tri, fingered);
    ASSERT_FALSE(pairs.empty());
    // The finger enters beside an old crossing, so either neighbour cancels it.
    int innermost = 0;
    for (const auto& pair : pairs) {
        EXPECT_EQ(pair.innermost, pair.y == pair.x + 1);
        if (!pair.innermost) continue;
        ++innermost;
        const auto back = cancel_pair(f.tri, fingered, pair);
        EXPECT_TRUE(same_surface(back, f.link));
        EXPECT_EQ(back.edge_weight(), fingered.edge_weight() - 2);
    }
    EXPECT_EQ(innermost, 2);
}

TEST(Normalize, NonInnermostPairRejected) {
    Fixture f("figure8.tri");
    int checked = 0;
    for (const auto& c : spun::testing::seeded_corpus(f.tri, f.link, 60, 500)) {
        const auto pairs = find_canceling_pairs(f.tri, c.pattern);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].innermost) continue;
            EXPECT_THROW(cancel_pair(f.tri, c.pattern, pairs[i]), PatternError);
            // Within a class, innermost pairs come before wider ones.
            for (std::size_t j = i + 1; j < pairs.size(); ++j)
                if (pairs[j].edge_class == pairs[i].edge_class) EXPECT_GE(pairs[j].y - pairs[j].x, pairs[i].y - pairs[i].x);
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Normalize, CancelShrinksLongPieces) {
    Fixture f("figure8.tri");
    const auto fingered = load_pattern(kData + "/figure8_finger.pat", f.tri);
    const auto pair = find_canceling_pairs(f.tri, fingered).front();
    const auto back = cancel_pair(f.tri, fingered, pair);
    for (const auto& piece : back.pieces) EXPECT_EQ(piece.length(), 3);
    EXPECT_TRUE(back.circles.empty());
}

TEST(Normalize, FingerNormalizesInOneCancel) {
    for (const char* name : {"figure8.tri", "figure8_regina.tri"}) {
        Fixture f(name);
        const auto fingered = first_finger(f.tri, f.link);
        const auto r = normalize(f.tri, fingered, 10);
        ASSERT_TRUE(r.ok) << r.failure;
        EXPECT_EQ(r.ledger.cancels(), 1);
        EXPECT_EQ(r.ledger.compressions(), 0);
        EXPECT_TRUE(same_surface(r.pattern, f.link));
        ASSERT_TRUE(r.vector);
        EXPECT_EQ(*r.vector, f.link_vector);
        EXPECT_NE(r.ledger.str().find(kMoveAssumption), std::string::npos);
    }
}

TEST(Normalize, IdempotentOnNormalPatterns) {
    Fixture f("figure8.tri");
    for (long k : {1L, 2L, 3L}) {
        const auto p = pattern_from_surface(f.tri, f.link_vector.scaled(k));
        const auto r = normalize(f.tri, p, 0);
        ASSERT_TRUE(r.ok) << r.failure;
        EXPECT_TRUE(r.ledger.moves.empty());
        EXPECT_EQ(r.pattern, p);
    }
}

TEST(Normalize, StepLimitAndInconsistency) {
    Fixture f("figure8.tri");
    const auto fingered = load_pattern(kData + "/figure8_finger.pat", f.tri);
    const auto r = normalize(f.tri, fingered, 0);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.failure.find("max steps"), std::string::npos);
    auto broken = f.link;
    broken.pieces.pop_back();
    const auto s = normalize(f.tri, broken, 10);
    EXPECT_FALSE(s.ok);
    EXPECT_NE(s.failure.find("inconsistent"), std::string::npos);
}

TEST(Normalize, CorpusRestoresTheSurface) {
    for (const char* name : {"figure8.tri", "figure8_regina.tri"}) {
        Fixture f(name);
        PreNormalPattern doubled = pattern_from_surface(f.tri, f.link_vector.scaled(2));
        int spawned = 0;
        for (const PreNormalPattern* base : {&f.link, &doubled}) {
            const auto expected = to_surface_vector(f.tri, *base);
            for (const auto& c : spun::testing::seeded_corpus(f.tri, *base, 120, 7)) {
                const auto r = normalize(f.tri, c.pattern, 200);
                ASSERT_TRUE(r.ok) << name << " " << c.name << ": " << r.failure;
                EXPECT_EQ(*r.vector, expected) << c.name;
                EXPECT_TRUE(same_surface(r.pattern, *base)) << c.name;
                EXPECT_EQ(r.ledger.cancels(), c.fingers) << c.name;
                EXPECT_GE(r.ledger.compressions(), c.circles) << c.name;
                spawned += r.ledger.compressions() > c.circles;
                long w = c.pattern.edge_weight();
                for (const auto& m : r.ledger.moves) {
                    EXPECT_EQ(m.weight_before, w);
                    EXPECT_EQ(m.weight_after, m.kind == Move::Kind::CancelPair ? w - 2 : w);
                    w = m.weight_after;
                }
                const auto again = normalize(f.tri, r.pattern, 0);
                EXPECT_TRUE(again.ok && again.ledger.moves.empty());
            }
        }
        EXPECT_GT(spawned, 0) << name;
    }
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "spun/coords.hpp"

using namespace spun;

namespace {

const std::string kData = SPUN_TEST_DATA;

// Vertex partitions of the three quad types.
const int kQuadSides[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};

long arc_count_oracle(const SurfaceVector& v, int tet, int face, int corner) {
    long n = 0;
    for (int c = 0; c < 4; ++c)
        if (c == corner) n += v.tri[static_cast<std::size_t>(tet)][static_cast<std::size_t>(c)];
    for (int q = 0; q < 3; ++q)
        for (const auto& side : kQuadSides[q])
            if ((side[0] == face && side[1] == corner) || (side[1] == face && side[0] == corner))
                n += v.quad[static_cast<std::size_t>(tet)][static_cast<std::size_t>(q)];
    return n;
}

SurfaceVector random_vector(std::mt19937& rng, int tets, int hi) {
    SurfaceVector v(tets);
    for (int t = 0; t < tets; ++t) {
        for (auto& x : v.tri[static_cast<std::size_t>(t)]) x = static_cast<long>(rng() % static_cast<unsigned>(hi + 1));
        v.quad[static_cast<std::size_t>(t)][rng() % 3] = static_cast<long>(rng() % static_cast<unsigned>(hi + 1));
    }
    return v;
}

}  // namespace

TEST(Matching, FigureEightRowsAreFrozen) {
    const auto a = build_matching_system(load_triangulation(kData + "/figure8.tri"));
    EXPECT_EQ(a.columns, 6);
    const std::vector<long> ra{-1, 2, -1, 2, -1, -1};
    EXPECT_EQ(a.rows, (std::vector<std::vector<long>>{ra, ra}));
    const auto b = build_matching_system(load_triangulation(kData + "/figure8_regina.tri"));
    const std::vector<long> rb{2, -1, -1, 2, -1, -1};
    EXPECT_EQ(b.rows, (std::vector<std::vector<long>>{rb, rb}));
    EXPECT_FALSE(a.convention.empty());
}

TEST(Matching, ExternalVertexSurfacesSatisfyRows) {
    // Quad vertex surfaces reported by Regina for the two labellings.
    const std::vector<std::vector<long>> m004{{2, 0, 0, 1, 0, 0}, {0, 0, 2, 1, 0, 0}, {0, 1, 0, 0, 2, 0}, {0, 1, 0, 0, 0, 2}};
    const std::vector<std::vector<long>> other{{0, 2, 0, 1, 0, 0}, {0, 0, 2, 1, 0, 0}, {1, 0, 0, 0, 2, 0}, {1, 0, 0, 0, 0, 2}};
    const auto a = build_matching_system(load_triangulation(kData + "/figure8.tri"));
    const auto b = build_matching_system(load_triangulation(kData + "/figure8_regina.tri"));
    for (const auto& v : m004) EXPECT_TRUE(a.satisfied_by(QuadVector(v)));
    for (const auto& v : other) EXPECT_TRUE(b.satisfied_by(QuadVector(v)));
}

TEST(Matching, RowsVanishOnTetrahedronSums) {
    // Adding one of each quad type in a tetrahedron adds nothing around any edge.
    for (const char* name : {"figure8.tri", "figure8_regina.tri", "figure8_double.tri"}) {
        const auto tri = load_triangulation(kData + "/" + name);
        const auto m = build_matching_system(tri);
        for (int t = 0; t < tri.size(); ++t) {
            QuadVector v(tri.size());
            for (int q = 0; q < 3; ++q) v.at(t, q) = 1;
            EXPECT_TRUE(m.satisfied_by(v)) << name;
        }
    }
}

TEST(Matching, RejectsNonOrientable) {
    EXPECT_THROW(build_matching_system(load_triangulation(kData + "/klein_cusp.tri")), TriangulationError);
}

TEST(Coords, ArcCountMatchesPieceOracle) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto v = random_vector(rng, 2, 5);
        for (int t = 0; t < 2; ++t)
            for (int f = 0; f < 4; ++f)
                for (int c = 0; c < 4; ++c)
                    if (c != f) EXPECT_EQ(arc_count(v, t, f, c), arc_count_oracle(v, t, f, c));
    }
}

TEST(Coords, EdgeCrossingsCountPiecesMeetingTheEdge) {
    SurfaceVector v(1);
    v.tri[0] = {1, 2, 3, 4};
    v.quad[0] = {5, 0, 0};
    // Slot {0,1}: triangles at 0 and 1; quad 0 misses it.
    EXPECT_EQ(edge_crossings(v, 0, 0), 3);
    // Slot {0,2}: triangles at 0 and 2 plus quad 0.
    EXPECT_EQ(edge_crossings(v, 0, 1), 1 + 3 + 5);
}

TEST(Coords, VertexLinksCloseUpWithZeroEuler) {
    for (const char* name : {"figure8.tri", "figure8_regina.tri", "figure8_double.tri"}) {
        const auto tri = load_triangulation(kData + "/" + name);
        SurfaceVector all(tri.size());
        for (std::size_t c = 0; c < tri.vertices().size(); ++c) {
            const auto link = vertex_link_vector(tri, static_cast<int>(c));
            EXPECT_TRUE(closed_matching_check(tri, link));
            EXPECT_EQ(euler_characteristic_compact(link, tri), 0);
            EXPECT_EQ(link.total_pieces(), static_cast<long>(tri.vertices()[c].corners.size()));
            all = all + link;
        }
        EXPECT_TRUE(closed_matching_check(tri, all.scaled(3)));
        EXPECT_EQ(euler_characteristic_compact(all.scaled(3), tri), 0);
    }
}

TEST(Coords, MostRandomVectorsDoNotMatch) {
    const auto tri = load_triangulation(kData + "/figure8.tri");
    std::mt19937 rng(5);
    int matched = 0;
    for (int i = 0; i < 200; ++i) matched += closed_matching_check(tri, random_vector(rng, 2, 3));
    EXPECT_LT(matched, 20);
    SurfaceVector bad = vertex_link_vector(tri, 0);
    bad.tri[0][0] += 1;
    EXPECT_FALSE(closed_matching_check(tri, bad));
    EXPECT_THROW(euler_characteristic_compact(bad, tri), std::invalid_argument);
}

TEST(Coords, Admissibility) {
    EXPECT_TRUE(is_admissible(QuadVector({0, 3, 0, 1, 0, 0})));
    EXPECT_FALSE(is_admissible(QuadVector({1, 1, 0, 0, 0, 0})));
    SurfaceVector v(1);
    v.quad[0] = {0, 2, 1};
    EXPECT_FALSE(is_admissible(v));
}

TEST(Coords, DimensionsAreChecked) {
    const auto tri = load_triangulation(kData + "/figure8.tri");
    EXPECT_THROW(check_dimensions(tri, QuadVector(3)), DimensionError);
    EXPECT_THROW(check_dimensions(tri, SurfaceVector(1)), DimensionError);
    EXPECT_NO_THROW(check_dimensions(tri, QuadVector(2)));
}

TEST(Coords, AngleStructureSumsAreExact) {
    for (const char* name : {"figure8.tri", "figure8_regina.tri", "figure8_double.tri"}) {
        const auto tri = load_triangulation(kData + "/" + name);
        const auto a = generalized_angle_structure(tri);
        ASSERT_EQ(a.size(), static_cast<std::size_t>(3 * tri.size()));
        for (int t = 0; t < tri.size(); ++t) EXPECT_EQ(a[3 * t] + a[3 * t + 1] + a[3 * t + 2], Rational(1));
        for (const auto& e : tri.edges()) {
            Rational sum = 0;
            for (const auto& s : e.slots) sum += a[static_cast<std::size_t>(3 * s.tet + quad_missing_edge(s.edge))];
            EXPECT_EQ(sum, Rational(2));
        }
    }
}

TEST(Coords, SpunEulerIsIndependentOfAngleStructure) {
    // All angles 1/3 is the regular ideal structure on the figure-eight.
    const auto tri = load_triangulation(kData + "/figure8.tri");
    const std::vector<Rational> regular(6, Rational(1, 3));
    for (const auto& q : std::vector<std::vector<long>>{{2, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 2}}) {
        const QuadVector v(q);
        EXPECT_EQ(spun_euler_characteristic(tri, v), Rational(-1));
        EXPECT_EQ(spun_euler_characteristic(v, regular), Rational(-1));
    }
}

TEST(Coords, TextRoundTrip) {
    std::mt19937 rng(2);
    const auto v = random_vector(rng, 3, 9);
    EXPECT_EQ(parse_surface(format_surface(v)), v);
    const QuadVector q({1, 0, 0, 0, 4, 0});
    EXPECT_EQ(parse_quads(format_quads(q)), q);
    EXPECT_EQ(format_rational(Rational(-3, 6)), "-1/2");
    EXPECT_EQ(format_rational(Rational(4)), "4");
}

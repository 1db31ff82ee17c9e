#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "spun/cone.hpp"

using namespace spun;

namespace {

const std::string kData = SPUN_TEST_DATA;

// Kernel of the columns in `cols`, by plain rational elimination.
std::vector<std::vector<Rational>> kernel(const std::vector<std::vector<long>>& rows, const std::vector<int>& cols) {
    const std::size_t n = cols.size();
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (int c : cols) row.emplace_back(r[static_cast<std::size_t>(c)]);
        a.push_back(row);
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        const Rational lead = a[r][c];
        for (auto& x : a[r]) x /= lead;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
        std::vector<Rational> v(n, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -a[i][free];
        basis.push_back(v);
    }
    return basis;
}

// Extremal rays as the sign-definite kernels of column subsets with a
// one-dimensional kernel and full support.
std::set<std::vector<long>> support_oracle(const MatchingSystem& m) {
    std::set<std::vector<long>> out;
    const int n = m.columns;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
            if (mask >> c & 1) cols.push_back(c);
        const auto k = kernel(m.rows, cols);
        if (k.size() != 1) continue;
        const auto& v = k[0];
        const bool pos = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x > 0; });
        const bool neg = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x < 0; });
        if (!pos && !neg) continue;
        boost::multiprecision::cpp_int den = 1;
        for (const auto& x : v) den = boost::multiprecision::lcm(den, denominator(x));
        std::vector<long> ray(static_cast<std::size_t>(n), 0);
        long g = 0;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const Rational scaled = abs(v[i]) * Rational(den);
            ray[static_cast<std::size_t>(cols[i])] = static_cast<long>(numerator(scaled));
            g = std::gcd(g, ray[static_cast<std::size_t>(cols[i])]);
        }
        for (auto& x : ray) x /= g;
        out.insert(ray);
    }
    return out;
}

std::set<std::vector<long>> as_set(const std::vector<Ray>& rays) {
    std::set<std::vector<long>> out;
    for (const auto& r : rays) out.insert(r.v);
    return out;
}

MatchingSystem random_system(std::mt19937& rng, int columns, int rows) {
    std::vector<std::vector<long>> r(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(columns)));
    for (auto& row : r)
        for (auto& x : row) x = static_cast<long>(rng() % 5) - 2;
    return matching_system_from_rows(columns, r);
}

}  // namespace

TEST(Cone, FigureEightRaysMatchSupportOracle) {
    for (const char* name : {"figure8.tri", "figure8_regina.tri", "figure8_double.tri"}) {
        const auto m = build_matching_system(load_triangulation(kData + "/" + name));
        const auto rays = extremal_rays(m);
        EXPECT_EQ(as_set(rays), support_oracle(m)) << name;
        EXPECT_TRUE(std::is_sorted(rays.begin(), rays.end()));
        for (const auto& r : rays) {
            EXPECT_TRUE(is_extremal(m, r.v));
            EXPECT_EQ(r.admissible, is_admissible_coordinates(r.v));
        }
    }
}

TEST(Cone, FigureEightCounts) {
    const auto rays = extremal_rays(build_matching_system(load_triangulation(kData + "/figure8.tri")));
    EXPECT_EQ(rays.size(), 8u);
    EXPECT_EQ(std::count_if(rays.begin(), rays.end(), [](const Ray& r) { return r.admissible; }), 4);
}

TEST(Cone, RandomSystemsMatchSupportOracle) {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const int columns = 2 + static_cast<int>(rng() % 6);
        const int rows = 1 + static_cast<int>(rng() % 3);
        const auto m = random_system(rng, columns, rows);
        EXPECT_EQ(as_set(extremal_rays(m)), support_oracle(m)) << "trial " << trial;
    }
}

TEST(Cone, BruteForceAgreesWhenBoundCoversMinors) {
    std::mt19937 rng(99);
    int compared = 0;
    for (int trial = 0; trial < 200 && compared < 30; ++trial) {
        const auto m = random_system(rng, 2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 2));
        const long bound = minor_bound(m);
        if (bound > 6) continue;
        ++compared;
        EXPECT_EQ(brute_force_rays(m, static_cast<int>(std::max(bound, 1L))), extremal_rays(m));
    }
    EXPECT_GE(compared, 30);
}

TEST(Cone, BruteForceGuards) {
    const auto wide = matching_system_from_rows(9, {std::vector<long>(9, 1)});
    EXPECT_THROW(brute_force_rays(wide, 2), GuardError);
    const auto m = matching_system_from_rows(3, {{1, -1, 0}});
    EXPECT_THROW(brute_force_rays(m, 0), GuardError);
    EXPECT_THROW(brute_force_rays(m, 13), GuardError);
}

TEST(Cone, EmptyAndTrivialSystems) {
    // x0 + x1 = 0 forces x0 = x1 = 0; x2 is free.
    const auto m = matching_system_from_rows(3, {{1, 1, 0}});
    const auto rays = extremal_rays(m);
    ASSERT_EQ(rays.size(), 1u);
    EXPECT_EQ(rays[0].v, (std::vector<long>{0, 0, 1}));
    const auto none = matching_system_from_rows(2, {{1, 1}});
    EXPECT_TRUE(extremal_rays(none).empty());
}

TEST(Cone, MinorBound) {
    EXPECT_EQ(minor_bound(matching_system_from_rows(2, {{1, 2}, {3, 4}})), 4);
    EXPECT_EQ(minor_bound(matching_system_from_rows(3, {{2, 0, 0}, {0, 3, 0}})), 6);
    EXPECT_EQ(minor_bound(matching_system_from_rows(2, {{0, 0}})), 1);
}

TEST(Cone, NonnegativeCombination) {
    EXPECT_TRUE(is_nonnegative_combination({3, 2}, {1, 0}, {0, 1}));
    EXPECT_FALSE(is_nonnegative_combination({3, -2}, {1, 0}, {0, 1}));
    EXPECT_FALSE(is_nonnegative_combination({1, 1, 1}, {1, 0, 0}, {0, 1, 0}));
    EXPECT_TRUE(is_nonnegative_combination({2, 2}, {1, 1}, {1, 1}));
}

TEST(Cone, AdmissibleCoordinates) {
    EXPECT_TRUE(is_admissible_coordinates({0, 0, 0, 0, 5, 0}));
    EXPECT_FALSE(is_admissible_coordinates({0, 1, 1, 0, 0, 0}));
}

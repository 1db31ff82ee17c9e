#include "spun/cone.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "spun/linalg.hpp"

namespace spun {

using boost::multiprecision::cpp_int;

bool is_admissible_coordinates(const std::vector<long>& v) {
    for (std::size_t base = 0; base < v.size(); base += 3) {
        int used = 0;
        for (std::size_t i = base; i < std::min(v.size(), base + 3); ++i) used += v[i] != 0;
        if (used > 1) return false;
    }
    return true;
}

MatchingSystem matching_system_from_rows(int columns, std::vector<std::vector<long>> rows) {
    for (const auto& r : rows)
        if (r.size() != static_cast<std::size_t>(columns)) throw DimensionError("row length does not match columns");
    MatchingSystem m;
    m.columns = columns;
    m.rows = std::move(rows);
    m.convention = "explicit";
    return m;
}

namespace {

struct DDRay {
    std::vector<cpp_int> x;
    boost::dynamic_bitset<> zero;  // coordinates equal to 0
};

void make_primitive(std::vector<cpp_int>& x) {
    cpp_int g = 0;
    for (const auto& a : x) g = gcd(g, a);
    if (g > 1)
        for (auto& a : x) a /= g;
}

std::vector<std::vector<long>> distinct_rows(const MatchingSystem& m) {
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> out;
    for (const auto& r : m.rows) {
        if (std::all_of(r.begin(), r.end(), [](long a) { return a == 0; })) continue;
        if (seen.insert(r).second) out.push_back(r);
    }
    return out;
}

std::vector<Ray> finish(std::vector<std::vector<long>> vectors) {
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    std::vector<Ray> out;
    for (auto& v : vectors) {
        const bool adm = is_admissible_coordinates(v);
        out.push_back(Ray{std::move(v), adm});
    }
    return out;
}

}  // namespace

std::vector<Ray> extremal_rays(const MatchingSystem& m) {
    const auto n = static_cast<std::size_t>(m.columns);
    if (n == 0) return {};
    std::vector<DDRay> rays;
    for (std::size_t i = 0; i < n; ++i) {
        DDRay r{std::vector<cpp_int>(n, 0), boost::dynamic_bitset<>(n)};
        r.x[i] = 1;
        r.zero.set();
        r.zero.reset(i);
        rays.push_back(std::move(r));
    }

    for (const auto& row : distinct_rows(m)) {
        std::vector<cpp_int> value(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<DDRay> next;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            cpp_int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (rays[k].x[i] != 0) s += rays[k].x[i] * row[i];
            value[k] = s;
            if (s > 0) pos.push_back(k);
            else if (s < 0) neg.push_back(k);
            else next.push_back(rays[k]);
        }
        for (std::size_t a : pos) {
            for (std::size_t b : neg) {
                const auto common = rays[a].zero & rays[b].zero;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == a || k == b) continue;
                    if (common.is_subset_of(rays[k].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                DDRay r{std::vector<cpp_int>(n), boost::dynamic_bitset<>(n)};
                for (std::size_t i = 0; i < n; ++i) {
                    r.x[i] = value[a] * rays[b].x[i] - value[b] * rays[a].x[i];
                    r.zero[i] = r.x[i] == 0;
                }
                make_primitive(r.x);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    std::vector<std::vector<long>> vectors;
    for (auto& r : rays) {
        make_primitive(r.x);
        std::vector<long> v;
        for (const auto& a : r.x) {
            if (a > std::numeric_limits<long>::max()) throw std::overflow_error("ray entry exceeds 64 bits");
            v.push_back(static_cast<long>(a));
        }
        vectors.push_back(std::move(v));
    }
    return finish(std::move(vectors));
}

std::vector<Ray> brute_force_rays(const MatchingSystem& m, int bound) {
    if (m.columns > 8) throw GuardError("brute force needs at most 8 columns");
    if (bound < 1 || bound > 12) throw GuardError("brute force bound must be in 1..12");
    const auto n = static_cast<std::size_t>(m.columns);

    std::vector<std::vector<long>> solutions;
    std::vector<long> x(n, 0);
    while (true) {
        std::size_t i = 0;
        while (i < n && x[i] == bound) x[i++] = 0;
        if (i == n) break;
        ++x[i];
        long g = 0;
        for (long a : x) g = std::gcd(g, a);
        if (g != 1) continue;
        bool ok = true;
        for (std::size_t r = 0; r < m.rows.size() && ok; ++r) ok = m.row_dot(r, x) == 0;
        if (ok) solutions.push_back(x);
    }

    auto support_within = [n](const std::vector<long>& u, const std::vector<long>& v) {
        for (std::size_t i = 0; i < n; ++i)
            if (u[i] != 0 && v[i] == 0) return false;
        return true;
    };
    std::vector<std::vector<long>> extremal;
    for (const auto& v : solutions) {
        bool decomposable = false;
        for (const auto& u : solutions) {
            if (&u == &v) continue;
            if (support_within(u, v)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) extremal.push_back(v);
    }
    return finish(std::move(extremal));
}

bool is_extremal(const MatchingSystem& m, const std::vector<long>& v) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (v[i] > 0) support.push_back(i);
    }
    if (support.empty()) return false;
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        if (m.row_dot(r, v) != 0) return false;
    linalg::Matrix a;
    for (const auto& row : m.rows) {
        std::vector<linalg::Rational> sub;
        for (std::size_t i : support) sub.emplace_back(row[i]);
        a.push_back(std::move(sub));
    }
    return static_cast<int>(support.size()) - linalg::rank(std::move(a)) == 1;
}

bool is_nonnegative_combination(const std::vector<long>& v, const std::vector<long>& x, const std::vector<long>& y) {
    linalg::Matrix a;
    std::vector<linalg::Rational> b;
    for (std::size_t i = 0; i < v.size(); ++i) {
        a.push_back({linalg::Rational(x[i]), linalg::Rational(y[i])});
        b.emplace_back(v[i]);
    }
    // With x, y independent the coefficients are unique; otherwise try each alone.
    if (linalg::rank(a) == 2) {
        auto c = linalg::solve(a, b);
        return c && (*c)[0] >= 0 && (*c)[1] >= 0;
    }
    for (const auto* w : {&x, &y}) {
        linalg::Matrix col;
        for (long e : *w) col.push_back({linalg::Rational(e)});
        auto c = linalg::solve(col, b);
        if (c && (*c)[0] >= 0) return true;
    }
    return false;
}

namespace {
linalg::Rational det(linalg::Matrix a) {
    const std::size_t n = a.size();
    linalg::Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const linalg::Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

long minor_bound(const MatchingSystem& m) {
    const auto rows = distinct_rows(m);
    const int r = static_cast<int>(rows.size());
    long best = 1;
    for (int k = 1; k <= std::min(r, m.columns); ++k) {
        std::vector<std::vector<int>> rs, cs;
        std::vector<int> cur;
        subsets(r, k, 0, cur, rs);
        subsets(m.columns, k, 0, cur, cs);
        for (const auto& ri : rs) {
            for (const auto& ci : cs) {
                linalg::Matrix a;
                for (int i : ri) {
                    std::vector<linalg::Rational> row;
                    for (int j : ci) row.emplace_back(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    a.push_back(std::move(row));
                }
                const linalg::Rational d = abs(det(std::move(a)));
                best = std::max(best, static_cast<long>(numerator(d)));
            }
        }
    }
    return best;
}

}  // namespace spun

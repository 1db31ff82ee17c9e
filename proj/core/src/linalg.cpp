#include "spun/linalg.hpp"

#include <stdexcept>

namespace spun::linalg {

std::vector<int> rref(Matrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const std::size_t cols = a.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pick = row;
        while (pick < a.size() && a[pick][col] == 0) ++pick;
        if (pick == a.size()) continue;
        std::swap(a[row], a[pick]);
        const Rational lead = a[row][col];
        for (auto& x : a[row]) x /= lead;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank(Matrix a) { return static_cast<int>(rref(a).size()); }

std::vector<std::vector<Rational>> nullspace(Matrix a, int columns) {
    for (const auto& r : a)
        if (r.size() != static_cast<std::size_t>(columns)) throw std::invalid_argument("nullspace: ragged matrix");
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(columns), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < columns; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(columns));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -a[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(Matrix a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
    if (a.empty()) return std::vector<Rational>{};
    const std::size_t cols = a.front().size();
    for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    const auto pivots = rref(a);
    if (!pivots.empty() && static_cast<std::size_t>(pivots.back()) == cols) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = a[r][cols];
    return x;
}

}  // namespace spun::linalg

#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spun::linalg {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(Matrix& a);

int rank(Matrix a);

/// Basis of { x : A x = 0 }, one vector per free column.
std::vector<std::vector<Rational>> nullspace(Matrix a, int columns);

/// Some solution of A x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Rational>> solve(Matrix a, const std::vector<Rational>& b);

template <class Int>
Matrix to_rational(const std::vector<std::vector<Int>>& rows) {
    Matrix out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

}  // namespace spun::linalg

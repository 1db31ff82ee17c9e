#pragma once

#include <stdexcept>
#include <vector>

#include "spun/coords.hpp"

namespace spun {

struct Ray {
    std::vector<long> v;  // primitive, nonnegative
    bool admissible = false;

    friend bool operator==(const Ray&, const Ray&) = default;
    friend auto operator<=>(const Ray& a, const Ray& b) { return a.v <=> b.v; }
};

class GuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// At most one nonzero entry in each consecutive block of three coordinates.
bool is_admissible_coordinates(const std::vector<long>& v);

/// All extremal rays of { v >= 0 : M v = 0 } by double description, in
/// primitive form and sorted lexicographically.
std::vector<Ray> extremal_rays(const MatchingSystem& m);

/// Exhaustive search over [0, bound]^columns, keeping primitive solutions that
/// no other non-parallel solution fits inside (by support). Requires
/// columns <= 8 and 1 <= bound <= 12.
std::vector<Ray> brute_force_rays(const MatchingSystem& m, int bound);

/// A nonnegative solution spans an extremal ray iff the columns of M on its
/// support have a one-dimensional kernel.
bool is_extremal(const MatchingSystem& m, const std::vector<long>& v);

/// True iff v = a*x + b*y for some rationals a, b >= 0.
bool is_nonnegative_combination(const std::vector<long>& v, const std::vector<long>& x, const std::vector<long>& y);

/// Largest absolute value of a square minor of M. Extremal rays have
/// primitive entries no larger than this, since each is a vector of minors.
/// The empty minor counts, so the bound is at least 1.
long minor_bound(const MatchingSystem& m);

MatchingSystem matching_system_from_rows(int columns, std::vector<std::vector<long>> rows);

}  // namespace spun

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braces/skew_brace.hpp"

namespace braces {

/// Set-theoretic solution r(x,y) = (lam[x][y], rho[y][x]) on {0,..,n-1}.
struct Solution {
    int n = 0;
    std::vector<std::vector<Elem>> lam;  // lam[x][y]: first component
    std::vector<std::vector<Elem>> rho;  // rho[y][x]: second component
};

/// Checks bijectivity on pairs, non-degeneracy and the braid relation.
/// Returns empty string when valid, otherwise a description of the failure.
std::string validate_solution(const Solution& s);

/// Canonical solution of a skew brace: lam[x][y] = lambda_x(y) and
/// rho[y][x] = (lambda_x(y))^-1 x y in (B,.). Output is validated.
Solution solution_from_brace(const SkewBrace& b);

Solution flip_solution(int n);

struct Retraction {
    Solution quotient;
    std::vector<int> class_of;  // point -> class index
};

/// Quotient by x ~ y iff lam rows and rho rows agree; the induced tables are
/// checked for well-definedness and the result revalidated.
Retraction retract(const Solution& s);

/// Least k with the k-fold retraction of size 1; nullopt when the tower
/// stabilizes at size > 1. One-point solutions have level 0.
std::optional<int> multipermutation_level(const Solution& s);

/// Sizes along the retraction tower, ending at the first fixed point.
std::vector<int> retraction_tower_sizes(const Solution& s);

}  // namespace braces

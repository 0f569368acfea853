#pragma once

// Exact invariants of a Hirzebruch-Jung string: the order of the local
// group (a continuant), the discrepancy coefficients a_j, the
// self-intersection D_p^2 of the discrepancy divisor, and gamma_p, the
// string's contribution to the right-hand side of the orbifold inequality.

#include "hjcert/hj_string.hpp"
#include "hjcert/rational.hpp"

#include <vector>

namespace hjcert {

// |G_p| = |det(intersection matrix)| via the recurrence
// K_j = n_j K_{j-1} - K_{j-2}, K_0 = 1, K_{-1} = 0.
Integer continuant(const HJString& s);

// The unique solution a of the tridiagonal system
//   n_j a_j - a_{j-1} - a_{j+1} = n_j - 2,   a_0 = a_{k+1} = 0,
// by exact forward elimination + back substitution. Every a_j lies in
// [0, 1).
std::vector<Rational> solve_discrepancies(const HJString& s);

// D_p^2 = -sum a_j (n_j - 2).
Rational dp_squared(const HJString& s);

// Independent route to the same value: a^T M a with M the intersection
// matrix. profile() computes both and insists they agree.
Rational dp_squared_quadratic_form(const HJString& s);

// gamma_p = 1/|G_p| + D_p^2 / 3.
Rational contribution(const HJString& s);

// The string of the cyclic singularity of type (1/n)(1, q): the unique
// (n_1, ..., n_k), n_j >= 2, with n/q = n_1 - 1/(n_2 - 1/(... - 1/n_k)).
// Requires n >= 2, 1 <= q < n, gcd(n, q) = 1.
HJString hj_expansion(long n, long q);

struct SingularityProfile {
    HJString string;
    Integer order;                      // |G_p|
    std::vector<Rational> discrepancies;  // a_j, reduced
    Rational d_squared;                 // D_p^2
    Rational gamma;                     // 1/|G_p| + D_p^2/3

    // a_j written over the common denominator |G_p|: a_j = x_j / |G_p|.
    // Always integral.
    std::vector<Integer> scaled_discrepancies() const;

    friend bool operator==(const SingularityProfile& a, const SingularityProfile& b) = default;
};

SingularityProfile profile(const HJString& s);

} // namespace hjcert

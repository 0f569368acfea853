#pragma once

// Global numerics of the hypothetical non-rational surface being
// eliminated: Euler number / K^2 pairing, the exact left-hand side of the
// orbifold inequality, right-hand side summation, and the arithmetic that
// caps the number of singular points at four.

#include "hjcert/hj_string.hpp"
#include "hjcert/profile.hpp"
#include "hjcert/rational.hpp"

#include <utility>
#include <vector>

namespace hjcert {

// The scan is finite: c2 = 3 is excluded by an external axiom, and the
// curve budget c2 - 3 <= 3 * 4 caps c2 at 15.
inline constexpr int kC2Min = 4;
inline constexpr int kC2Max = 15;
inline constexpr int kMaxSingularPoints = 4;

struct SurfaceNumerics {
    int c2;         // topological Euler number of the resolution
    int ksq_prime;  // K^2 of the resolution; c2 + ksq_prime = 12
    int b2;         // second Betti number; b2 = c2 - 2

    explicit SurfaceNumerics(int c2_value);

    friend bool operator==(const SurfaceNumerics& a, const SurfaceNumerics& b) = default;
};

// One case of the finite analysis: a surface numerics choice, a number of
// singular points r, and the multiset of per-point component counts
// (partition of the curve budget into r parts from {1,2,3}, stored
// descending).
struct CaseInstance {
    SurfaceNumerics numerics;
    int r;
    std::vector<int> partition;

    CaseInstance(int c2, int r_value, std::vector<int> parts);

    friend bool operator==(const CaseInstance& a, const CaseInstance& b) = default;
};

// Total number of exceptional curves: b2 - 1 = c2 - 3.
int curve_budget(int c2);

// Exact LHS of the inequality for a case with given c2 and r:
//   sum e(E_p) - c2 + K'^2/3  =  r - 3 + (12 - c2)/3,
// since each point with m components has Euler number m + 1 and the
// component counts add up to the curve budget.
Rational lhs_value(int c2, int r);

// RHS = sum of per-string contributions gamma_p.
Rational rhs_value(const std::vector<HJString>& strings);

// For r >= 5 singular points the pairwise-coprime orders are at least the
// first r primes, and sum 1/p_i <= r - 3 kills the inequality. Returns the
// exact reciprocal sum and the flag (sum <= r - 3).
std::pair<Rational, bool> reciprocal_prime_bound(int r);

// First n primes, ascending.
std::vector<long> first_primes(int n);

// All case instances of the scan: c2 = 4..15, every partition of
// c2 - 3 into at most 4 parts from {1,2,3}. Deterministic order:
// c2 ascending, r ascending, partitions lexicographically descending.
std::vector<CaseInstance> enumerate_case_instances();

// The instances for one c2 value, in the same canonical order.
std::vector<CaseInstance> case_instances_for(int c2);

} // namespace hjcert

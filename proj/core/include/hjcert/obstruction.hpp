#pragma once

// Lattice-theoretic elimination tests applied to a configuration of
// singularities: the per-point determinants must be pairwise coprime, and
// |det R| * (f*K)^2 must be a perfect square. Together with the exact
// inequality these kill every configuration in the scan.

#include "hjcert/hj_string.hpp"
#include "hjcert/rational.hpp"
#include "hjcert/surface.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hjcert {

// One string per singular point. Canonical form: each string is
// lexicographically <= its reverse, and the list is sorted longest first,
// ties lexicographic. Unique per multiset of singularity types.
class Configuration {
public:
    explicit Configuration(std::vector<HJString> strings);

    const std::vector<HJString>& strings() const { return strings_; }
    int size() const { return static_cast<int>(strings_.size()); }
    std::vector<int> lengths() const;

    std::string str() const;  // "(2,2,2)+(2,2)"

    friend bool operator==(const Configuration& a, const Configuration& b) = default;

private:
    std::vector<HJString> strings_;
};

bool configuration_less(const Configuration& a, const Configuration& b);

// Why a configuration dies (or doesn't).
struct InequalityViolated {
    Rational lhs;
    Rational rhs;  // rhs < lhs
    friend bool operator==(const InequalityViolated&, const InequalityViolated&) = default;
};
struct CoprimalityFailed {
    Integer det_i;
    Integer det_j;
    Integer gcd;  // > 1
    friend bool operator==(const CoprimalityFailed&, const CoprimalityFailed&) = default;
};
struct SquareObstruction {
    Integer det_r;
    Rational fstar_ksq;
    Rational product;  // det_r * fstar_ksq, not the square of an integer
    friend bool operator==(const SquareObstruction&, const SquareObstruction&) = default;
};
struct NonpositiveCanonicalSquare {
    Rational fstar_ksq;  // <= 0
    friend bool operator==(const NonpositiveCanonicalSquare&,
                           const NonpositiveCanonicalSquare&) = default;
};
struct Survives {
    friend bool operator==(const Survives&, const Survives&) = default;
};

using EliminationReason = std::variant<InequalityViolated, CoprimalityFailed, SquareObstruction,
                                       NonpositiveCanonicalSquare, Survives>;

bool is_survives(const EliminationReason& r);
std::string reason_kind(const EliminationReason& r);

// The primary reason (first failing test in the fixed order
// inequality -> coprimality -> positivity -> square) plus every failing
// test, for audit.
struct EliminationOutcome {
    EliminationReason reason;
    std::vector<EliminationReason> audit;
};

struct EliminationOptions {
    // (f*K)^2 > 0 as a standalone filter. The strict-paper mode turns it
    // off; the square test then handles nonpositive products directly (a
    // negative product is not a square).
    bool positivity_filter = true;
};

// Continuant of each string, in configuration order.
std::vector<Integer> determinants(const std::vector<HJString>& strings);
std::vector<Integer> determinants(const Configuration& config);

// True iff all pairwise gcds are 1; otherwise the first offending pair in
// canonical (i, j) scan order.
std::optional<CoprimalityFailed> pairwise_coprime(const std::vector<Integer>& dets);

// (f*K)^2 = K'^2 - sum D_p^2, exact.
Rational fstar_ksq(int ksq_prime, const Configuration& config);

// det_r * fksq: true with the integer witness m iff the product is a
// perfect square. Requires fksq > 0.
struct SquareCheck {
    bool ok;
    Integer witness;   // m with m^2 = product, when ok
    Rational product;  // det_r * fksq
};
SquareCheck square_condition(const Integer& det_r, const Rational& fksq);

// All four tests against one case instance. Shape of the configuration
// must match the instance's partition.
EliminationOutcome eliminate(const CaseInstance& instance, const Configuration& config,
                             const EliminationOptions& options = {});

// Same tests without a validated CaseInstance (used by the RDP
// cross-check and by tests that need to reach the Survives branch).
EliminationOutcome eliminate_with(const Rational& lhs, int ksq_prime, const Configuration& config,
                                  const EliminationOptions& options = {});

} // namespace hjcert

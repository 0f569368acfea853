#pragma once

// Sound, complete, finite enumeration of every configuration that survives
// the exact inequality in each case of the scan, plus the elimination of
// each survivor and the assembly of the machine-checkable certificate.
//
// Completeness of string generation rests on three exact bounds. With
// S = n_1 + ... + n_k and det the continuant:
//   length 3:  gamma < 1/4 - (S - 8)/3   (det >= 4, a_1 + a_3 < 2)
//   length 2:  gamma < 1/3 - (S - 6)/3   (det >= 3, a_1 + a_2 < 2)
//   length 1:  gamma(d) >= t is a quadratic condition whose admissible
//              interval lies below 4 - 3t
// so every slot scan is finite. A guard band is added on top and the test
// suite cross-checks the generated sets against brute force.

#include "hjcert/hj_string.hpp"
#include "hjcert/obstruction.hpp"
#include "hjcert/rational.hpp"
#include "hjcert/surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hjcert {

// Largest possible contribution of a single string of the given length:
// 1/2, 1/3, 1/4. (gamma <= 1/det and the minimal determinants per length
// are 2, 3, 4.)
Rational max_gamma_for_length(int length);

struct ScoredString {
    HJString string;
    Rational gamma;
};

// The complete finite set of canonical strings of the given length with
// gamma >= t, sorted by gamma descending (ties: shorter entries
// lexicographically first). length must be 1, 2 or 3.
std::vector<HJString> strings_with_contribution_at_least(const Rational& t, int length);

// Same set with the contributions attached, plus the sum cap that was
// scanned (for exhaustiveness records).
struct GenerationResult {
    std::vector<ScoredString> strings;
    int sum_cap;
};
GenerationResult scored_strings_with_contribution_at_least(const Rational& t, int length);

struct StringLess {
    bool operator()(const HJString& a, const HJString& b) const { return string_less(a, b); }
};

// All strings of length <= 3 with gamma > 0. Exactly five:
// (2,2,2) -> 1/4, (2,2) -> 1/3, (2,3) -> 1/15, (2) -> 1/2, (3) -> 2/9.
std::map<HJString, Rational, StringLess> positive_catalog();

struct MaxRhsResult {
    Rational value;
    Configuration witness;
    friend bool operator==(const MaxRhsResult&, const MaxRhsResult&) = default;
};

// Exact maximum of sum gamma over r-point configurations (every point a
// string of length <= 3) with pairwise coprime determinants, with a
// witness. r >= 3. Strings listed in `exclude` are not available.
MaxRhsResult max_rhs(int r, const std::vector<HJString>& exclude = {});

// Exact maximum of sum gamma over coprime configurations whose string
// lengths match the partition (descending parts from {1,2,3}); nullopt if
// no coprime configuration exists.
std::optional<MaxRhsResult> max_coprime_rhs_for_partition(const std::vector<int>& partition);

// All canonical configurations matching the instance's partition with
// sum gamma >= LHS, each paired with its exact RHS. Sorted by RHS
// descending, then configuration order.
std::vector<std::pair<Configuration, Rational>> enumerate_survivors(const CaseInstance& instance);

// One inequality survivor together with everything that kills it.
struct SurvivorRecord {
    Configuration config;
    Rational rhs;
    Integer det_r;
    Rational fksq;
    EliminationReason reason;
    std::vector<EliminationReason> audit;
    friend bool operator==(const SurvivorRecord&, const SurvivorRecord&) = default;
};

// Exhaustiveness record for one slot of the case partition.
struct SlotBound {
    int length;
    Rational threshold;  // strings with gamma >= threshold were generated
    int sum_cap;         // entries summed to at most this during the scan
    int candidates;      // number of candidate strings after exact filtering
    friend bool operator==(const SlotBound&, const SlotBound&) = default;
};

struct CaseReport {
    CaseInstance instance;
    Rational lhs;
    Rational rhs_upper_bound;  // sum over slots of max_gamma_for_length
    std::vector<SurvivorRecord> survivors;
    std::optional<MaxRhsResult> max_coprime_rhs;
    std::vector<SlotBound> exhaustiveness;
    bool eliminated;  // true iff no survivor record reads Survives
    friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

struct VerifyOptions {
    bool positivity_filter = true;  // off = strict-paper mode
    bool parallel = true;           // verify c2 groups concurrently
};

CaseReport verify_instance(const CaseInstance& instance, const VerifyOptions& options = {});

// Reports for every admissible (r, partition) at the given c2, canonical
// order. c2 must lie in [4, 15].
std::vector<CaseReport> verify_case(int c2, const VerifyOptions& options = {});

struct Axiom {
    std::string id;
    std::string statement;
    friend bool operator==(const Axiom&, const Axiom&) = default;
};

struct Certificate {
    std::string version;
    bool positivity_filter;
    std::vector<Axiom> axioms;
    int c2_min;
    int c2_max;
    int max_points;
    std::string scan_rationale;
    int prime_recheck_r_min;
    int prime_recheck_r_max;
    bool prime_recheck_ok;
    std::vector<CaseReport> cases;
    bool verdict;  // true iff every case report is eliminated
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// The full theorem run: every case instance over c2 = 4..15, r <= 4.
// Deterministic output regardless of scheduling. When only_c2 is set the
// certificate covers just that c2 group (a partial run; the verdict then
// speaks only for the included cases).
Certificate verify_theorem(const VerifyOptions& options = {},
                           std::optional<int> only_c2 = std::nullopt);

// First surviving configuration in a certificate, if any.
std::optional<SurvivorRecord> first_survivor(const Certificate& cert);

} // namespace hjcert

#pragma once

// Surfaces with rational double points only: enumerate the ADE root
// lattice candidates compatible with rank = 9 - K^2, pairwise-coprime
// summand determinants and K^2 = m^2 |det R|, then feed the candidates
// whose resolution graphs are chains of at most 3 curves back through the
// main elimination engine.

#include "hjcert/obstruction.hpp"
#include "hjcert/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hjcert {

enum class ADEFamily { A, D, E };

struct ADELattice {
    ADEFamily family;
    int rank;  // A_n: n >= 1; D_n: n >= 4; E_n: n in {6,7,8}

    std::string name() const;  // "A4", "D5", "E8"
    friend bool operator==(const ADELattice& a, const ADELattice& b) = default;
};

// |det| of the lattice: A_n -> n+1, D_n -> 4, E6 -> 3, E7 -> 2, E8 -> 1.
// Cross-checked against the exact determinant of the intersection matrix
// (A_n through the all-2 string continuant, D/E by fraction-free
// elimination on the graph matrix).
Integer ade_det(const ADELattice& lattice);

// |det| of the Dynkin-graph intersection matrix (diagonal -2, adjacency 1),
// computed independently of the closed forms.
Integer ade_intersection_det(const ADELattice& lattice);

struct ADESum {
    std::vector<ADELattice> summands;  // canonical order

    int rank() const;
    Integer det() const;  // product of summand dets
    std::string name() const;  // "A1+A2"
    friend bool operator==(const ADESum& a, const ADESum& b) = default;
};

struct RdpCandidate {
    int ksq;      // K^2 of the minimal resolution, 1..8
    ADESum sum;   // exceptional lattice
    Integer m;    // ksq = m^2 * det
};

// All (ksq, sum) with ksq = 1..8, rank(sum) = 9 - ksq, pairwise coprime
// summand dets and ksq = m^2 det for a positive integer m. Exactly seven.
std::vector<RdpCandidate> enumerate_rdp_candidates();

struct RdpCrossCheck {
    RdpCandidate candidate;
    bool ruled_out;
    // When ruled out: the case handed to the engine and its outcome.
    std::optional<CaseInstance> instance;
    std::optional<Configuration> config;
    std::optional<EliminationReason> reason;
    std::string note;  // why the candidate is out of the engine's reach, when it is
};

struct RdpReport {
    std::vector<RdpCrossCheck> checks;
};

// Hands every candidate whose summands are all chains of <= 3 curves to
// the elimination engine. Rules out exactly the A1+A2 and A1 candidates.
RdpReport cross_eliminate();

} // namespace hjcert

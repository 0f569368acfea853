#include "hjcert/rdp.hpp"

#include "hjcert/profile.hpp"
#include "hjcert/surface.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hjcert {

namespace {

void validate(const ADELattice& l) {
    switch (l.family) {
        case ADEFamily::A:
            if (l.rank < 1) throw std::invalid_argument("A_n requires n >= 1");
            return;
        case ADEFamily::D:
            if (l.rank < 4) throw std::invalid_argument("D_n requires n >= 4");
            return;
        case ADEFamily::E:
            if (l.rank < 6 || l.rank > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
            return;
    }
    throw std::invalid_argument("unknown ADE family");
}

// Adjacency of the Dynkin graph on vertices 0..rank-1.
std::vector<std::pair<int, int>> dynkin_edges(const ADELattice& l) {
    std::vector<std::pair<int, int>> edges;
    switch (l.family) {
        case ADEFamily::A:
            for (int i = 0; i + 1 < l.rank; ++i) edges.emplace_back(i, i + 1);
            break;
        case ADEFamily::D:
            // chain 0..rank-3, fork: rank-2 and rank-1 both meet rank-3
            for (int i = 0; i + 1 < l.rank - 2; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(l.rank - 3, l.rank - 2);
            edges.emplace_back(l.rank - 3, l.rank - 1);
            break;
        case ADEFamily::E:
            // chain 0..rank-2, extra vertex rank-1 attached to vertex 2
            for (int i = 0; i + 1 < l.rank - 1; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(2, l.rank - 1);
            break;
    }
    return edges;
}

// |det| of the graph matrix with diagonal -2, adjacency 1, by Bareiss
// fraction-free elimination. Exact.
Integer graph_det_abs(int rank, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(rank),
                                        std::vector<Integer>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) m[i][i] = -2;
    for (auto [a, b] : edges) m[a][b] = m[b][a] = 1;

    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < rank; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < rank; ++i) {
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < rank; ++i) {
            for (int j = k + 1; j < rank; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Integer det = m[rank - 1][rank - 1] * sign;
    return det < 0 ? Integer(-det) : det;
}

} // namespace

std::string ADELattice::name() const {
    const char* prefix = family == ADEFamily::A ? "A" : (family == ADEFamily::D ? "D" : "E");
    return prefix + std::to_string(rank);
}

Integer ade_intersection_det(const ADELattice& lattice) {
    validate(lattice);
    if (lattice.family == ADEFamily::A) {
        // A_n is the all-2 string; its continuant is the determinant
        return continuant(HJString(std::vector<int>(static_cast<std::size_t>(lattice.rank), 2)));
    }
    return graph_det_abs(lattice.rank, dynkin_edges(lattice));
}

Integer ade_det(const ADELattice& lattice) {
    validate(lattice);
    Integer closed_form;
    switch (lattice.family) {
        case ADEFamily::A: closed_form = lattice.rank + 1; break;
        case ADEFamily::D: closed_form = 4; break;
        case ADEFamily::E: closed_form = lattice.rank == 6 ? 3 : (lattice.rank == 7 ? 2 : 1); break;
    }
    if (closed_form != ade_intersection_det(lattice))
        throw std::logic_error("ade_det: closed form disagrees with the intersection matrix for " +
                               lattice.name());
    return closed_form;
}

int ADESum::rank() const {
    int total = 0;
    for (const auto& l : summands) total += l.rank;
    return total;
}

Integer ADESum::det() const {
    Integer product = 1;
    for (const auto& l : summands) product *= ade_det(l);
    return product;
}

std::string ADESum::name() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i) os << '+';
        os << summands[i].name();
    }
    return os.str();
}

namespace {

// All lattices of rank <= 8 in a fixed canonical order (family, rank).
std::vector<ADELattice> lattice_universe() {
    std::vector<ADELattice> all;
    for (int n = 1; n <= 8; ++n) all.push_back({ADEFamily::A, n});
    for (int n = 4; n <= 8; ++n) all.push_back({ADEFamily::D, n});
    for (int n = 6; n <= 8; ++n) all.push_back({ADEFamily::E, n});
    return all;
}

void sums_of_rank(const std::vector<ADELattice>& universe, int target, std::size_t from,
                  std::vector<ADELattice>& acc, std::vector<ADESum>& out) {
    if (target == 0) {
        out.push_back(ADESum{acc});
        return;
    }
    for (std::size_t i = from; i < universe.size(); ++i) {
        if (universe[i].rank > target) continue;
        acc.push_back(universe[i]);
        sums_of_rank(universe, target - universe[i].rank, i, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<RdpCandidate> enumerate_rdp_candidates() {
    auto universe = lattice_universe();
    std::vector<RdpCandidate> candidates;
    for (int ksq = 1; ksq <= 8; ++ksq) {
        int rank = 9 - ksq;
        std::vector<ADESum> sums;
        std::vector<ADELattice> acc;
        sums_of_rank(universe, rank, 0, acc, sums);
        for (auto& sum : sums) {
            std::vector<Integer> dets;
            dets.reserve(sum.summands.size());
            for (const auto& l : sum.summands) dets.push_back(ade_det(l));
            if (pairwise_coprime(dets)) continue;

            // ksq = m^2 * det for a positive integer m
            Integer det = sum.det();
            if (Integer(ksq) % det != 0) continue;
            Integer ratio = Integer(ksq) / det;
            Integer m;
            if (!is_perfect_square(ratio, m) || m == 0) continue;
            candidates.push_back({ksq, std::move(sum), m});
        }
    }
    return candidates;
}

RdpReport cross_eliminate() {
    RdpReport report;
    for (auto& candidate : enumerate_rdp_candidates()) {
        RdpCrossCheck check{candidate, false, std::nullopt, std::nullopt, std::nullopt, ""};

        bool all_chains = true;
        bool lengths_ok = true;
        for (const auto& l : candidate.sum.summands) {
            if (l.family != ADEFamily::A) all_chains = false;
            if (l.rank > 3) lengths_ok = false;
        }
        if (!all_chains) {
            check.note = "resolution graph " + candidate.sum.name() +
                         " is not a disjoint union of chains; outside the string engine";
        } else if (!lengths_ok) {
            check.note = "chain with more than 3 curves; outside the at-most-3-components "
                         "hypothesis";
        } else {
            // RDP: f*K = K', so K'^2 = ksq and c2 = 12 - ksq. Each A_n
            // summand is one singular point resolved by the all-2 string
            // of length n.
            std::vector<HJString> strings;
            std::vector<int> parts;
            for (const auto& l : candidate.sum.summands) {
                strings.emplace_back(std::vector<int>(static_cast<std::size_t>(l.rank), 2));
                parts.push_back(l.rank);
            }
            std::sort(parts.rbegin(), parts.rend());
            CaseInstance instance(12 - candidate.ksq, static_cast<int>(strings.size()), parts);
            Configuration config(std::move(strings));
            auto outcome = eliminate(instance, config);
            check.ruled_out = !is_survives(outcome.reason);
            check.instance = std::move(instance);
            check.config = std::move(config);
            check.reason = std::move(outcome.reason);
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace hjcert

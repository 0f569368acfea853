#include "hjcert/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hjcert {

SurfaceNumerics::SurfaceNumerics(int c2_value) : c2(c2_value), ksq_prime(12 - c2_value), b2(c2_value - 2) {
    if (c2 < kC2Min || c2 > kC2Max)
        throw std::invalid_argument("SurfaceNumerics: c2 = " + std::to_string(c2) +
                                    " outside the scan range [4, 15]");
}

CaseInstance::CaseInstance(int c2, int r_value, std::vector<int> parts)
    : numerics(c2), r(r_value), partition(std::move(parts)) {
    if (r < 1 || r > kMaxSingularPoints)
        throw std::invalid_argument("CaseInstance: r = " + std::to_string(r) + " outside [1, 4]");
    if (static_cast<int>(partition.size()) != r)
        throw std::invalid_argument("CaseInstance: partition size != r");
    if (!std::is_sorted(partition.rbegin(), partition.rend()))
        throw std::invalid_argument("CaseInstance: partition must be sorted descending");
    int sum = 0;
    for (int part : partition) {
        if (part < 1 || part > 3)
            throw std::invalid_argument("CaseInstance: part " + std::to_string(part) +
                                        " outside {1,2,3}");
        sum += part;
    }
    if (sum != curve_budget(c2))
        throw std::invalid_argument("CaseInstance: partition sums to " + std::to_string(sum) +
                                    ", curve budget is " + std::to_string(curve_budget(c2)));
}

int curve_budget(int c2) {
    if (c2 < kC2Min || c2 > kC2Max)
        throw std::invalid_argument("curve_budget: c2 = " + std::to_string(c2) +
                                    " outside the scan range [4, 15]");
    return c2 - 3;
}

Rational lhs_value(int c2, int r) {
    if (c2 < kC2Min || c2 > kC2Max)
        throw std::invalid_argument("lhs_value: c2 outside the scan range");
    if (r < 1 || r > kMaxSingularPoints)
        throw std::invalid_argument("lhs_value: r outside [1, 4]");
    return Rational(r - 3) + Rational(12 - c2, 3);
}

Rational rhs_value(const std::vector<HJString>& strings) {
    if (strings.empty()) throw std::invalid_argument("rhs_value: empty configuration");
    Rational total;
    for (const auto& s : strings) total += contribution(s);
    return total;
}

std::vector<long> first_primes(int n) {
    std::vector<long> primes;
    primes.reserve(static_cast<std::size_t>(n));
    long candidate = 2;
    while (static_cast<int>(primes.size()) < n) {
        bool is_prime = true;
        for (long p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) primes.push_back(candidate);
        ++candidate;
    }
    return primes;
}

std::pair<Rational, bool> reciprocal_prime_bound(int r) {
    if (r < 5)
        throw std::invalid_argument("reciprocal_prime_bound: vacuous for r < 5");
    Rational sum;
    for (long p : first_primes(r)) sum += Rational(Integer(1), Integer(p));
    return {sum, sum <= Rational(r - 3)};
}

namespace {

// Partitions of `budget` into exactly `r` parts from {1,2,3}, descending,
// listed lexicographically descending.
void partitions_rec(int budget, int r, int max_part, std::vector<int>& acc,
                    std::vector<std::vector<int>>& out) {
    if (r == 0) {
        if (budget == 0) out.push_back(acc);
        return;
    }
    for (int part = std::min(max_part, budget); part >= 1; --part) {
        if (budget - part > 3 * (r - 1)) continue;
        if (budget - part < r - 1) continue;
        acc.push_back(part);
        partitions_rec(budget - part, r - 1, part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<CaseInstance> case_instances_for(int c2) {
    int budget = curve_budget(c2);
    std::vector<CaseInstance> instances;
    for (int r = 1; r <= kMaxSingularPoints; ++r) {
        std::vector<std::vector<int>> parts;
        std::vector<int> acc;
        partitions_rec(budget, r, 3, acc, parts);
        for (auto& p : parts) instances.emplace_back(c2, r, std::move(p));
    }
    return instances;
}

std::vector<CaseInstance> enumerate_case_instances() {
    std::vector<CaseInstance> all;
    for (int c2 = kC2Min; c2 <= kC2Max; ++c2) {
        auto group = case_instances_for(c2);
        all.insert(all.end(), group.begin(), group.end());
    }
    return all;
}

} // namespace hjcert

#include "hjcert/enumerate.hpp"

#include "hjcert/profile.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace hjcert {

Rational max_gamma_for_length(int length) {
    switch (length) {
        case 1: return Rational(1, 2);
        case 2: return Rational(1, 3);
        case 3: return Rational(1, 4);
        default: throw std::invalid_argument("max_gamma_for_length: length must be 1, 2 or 3");
    }
}

namespace {

long floor_to_long(const Rational& r) {
    Integer q = r.num() / r.den();           // truncates toward zero
    if (r.num() < 0 && q * r.den() != r.num()) q -= 1;
    return q.convert_to<long>();
}

bool gamma_order(const ScoredString& a, const ScoredString& b) {
    if (a.gamma != b.gamma) return a.gamma > b.gamma;
    return string_less(a.string, b.string);
}

constexpr int kGuardBand = 3;

} // namespace

GenerationResult scored_strings_with_contribution_at_least(const Rational& t, int length) {
    GenerationResult result;
    std::vector<ScoredString>& out = result.strings;

    if (length == 1) {
        // gamma(d) >= t  <=>  d^2 - (4 - 3t) d + 1 <= 0, an interval whose
        // right end is below the root sum 4 - 3t. No monotonicity of
        // gamma(d) is assumed.
        long cap = std::max(2L, floor_to_long(Rational(4) - Rational(3) * t)) + kGuardBand;
        result.sum_cap = static_cast<int>(cap);
        for (long d = 2; d <= cap; ++d) {
            HJString s({static_cast<int>(d)});
            Rational g = contribution(s);
            if (g >= t) out.push_back({std::move(s), std::move(g)});
        }
    } else if (length == 2) {
        long cap = std::max(4L, floor_to_long(Rational(7) - Rational(3) * t) + kGuardBand);
        result.sum_cap = static_cast<int>(cap);
        for (int n1 = 2; n1 + 2 <= cap; ++n1) {
            for (int n2 = n1; n1 + n2 <= cap; ++n2) {  // canonical: n1 <= n2
                HJString s({n1, n2});
                Rational g = contribution(s);
                if (g >= t) out.push_back({std::move(s), std::move(g)});
            }
        }
    } else if (length == 3) {
        long cap = std::max(6L, floor_to_long(Rational(35, 4) - Rational(3) * t) + kGuardBand);
        result.sum_cap = static_cast<int>(cap);
        for (int n1 = 2; n1 + 4 <= cap; ++n1) {
            for (int n3 = n1; n1 + n3 + 2 <= cap; ++n3) {  // canonical: n1 <= n3
                for (int n2 = 2; n1 + n2 + n3 <= cap; ++n2) {
                    HJString s({n1, n2, n3});
                    Rational g = contribution(s);
                    if (g >= t) out.push_back({std::move(s), std::move(g)});
                }
            }
        }
    } else {
        throw std::invalid_argument("strings_with_contribution_at_least: length must be 1, 2 or 3");
    }

    std::sort(out.begin(), out.end(), gamma_order);
    return result;
}

std::vector<HJString> strings_with_contribution_at_least(const Rational& t, int length) {
    auto scored = scored_strings_with_contribution_at_least(t, length);
    std::vector<HJString> out;
    out.reserve(scored.strings.size());
    for (auto& e : scored.strings) out.push_back(std::move(e.string));
    return out;
}

std::map<HJString, Rational, StringLess> positive_catalog() {
    std::map<HJString, Rational, StringLess> catalog;
    for (int length = 1; length <= 3; ++length) {
        for (auto& e : scored_strings_with_contribution_at_least(Rational(0), length).strings) {
            if (e.gamma.is_positive()) catalog.emplace(e.string, e.gamma);
        }
    }
    return catalog;
}

namespace {

// Branch-and-bound maximum of sum gamma over coprime selections, one
// candidate list per slot. Slots of equal length share a list; indices are
// forced strictly increasing inside such a run (coprimality forbids
// repeated strings anyway). Suffix sums of the gamma-sorted lists give the
// optimistic bound.
struct CoprimeSearch {
    std::vector<const std::vector<ScoredString>*> slot_candidates;
    std::vector<bool> same_list_as_previous;
    std::optional<MaxRhsResult> best;

    void run() {
        std::vector<int> chosen;
        std::vector<Integer> dets;
        Rational zero;
        descend(0, 0, zero, chosen, dets);
    }

    void descend(std::size_t slot, int min_index, const Rational& sum, std::vector<int>& chosen,
                 std::vector<Integer>& dets) {
        if (slot == slot_candidates.size()) {
            if (!best || sum > best->value) {
                std::vector<HJString> strings;
                strings.reserve(chosen.size());
                for (std::size_t i = 0; i < chosen.size(); ++i) {
                    strings.push_back(
                        (*slot_candidates[i])[static_cast<std::size_t>(chosen[i])].string);
                }
                best = MaxRhsResult{sum, Configuration(std::move(strings))};
            }
            return;
        }
        const auto& candidates = *slot_candidates[slot];
        int start = same_list_as_previous[slot] ? min_index : 0;
        for (int i = start; i < static_cast<int>(candidates.size()); ++i) {
            const auto& entry = candidates[static_cast<std::size_t>(i)];
            if (best) {
                // entry.gamma is the best this slot can still contribute
                Rational optimistic = sum + entry.gamma;
                for (std::size_t j = slot + 1; j < slot_candidates.size(); ++j) {
                    optimistic += (*slot_candidates[j])[0].gamma;
                }
                if (optimistic <= best->value) break;  // sorted: later i only worse
            }
            Integer det = continuant(entry.string);
            bool coprime = true;
            for (const auto& d : dets) {
                if (int_gcd(d, det) > 1) {
                    coprime = false;
                    break;
                }
            }
            if (!coprime) continue;
            chosen.push_back(i);
            dets.push_back(det);
            descend(slot + 1, i + 1, sum + entry.gamma, chosen, dets);
            dets.pop_back();
            chosen.pop_back();
        }
    }
};

std::optional<MaxRhsResult> coprime_max_over_slots(
    const std::vector<int>& slot_lengths, const std::vector<HJString>& exclude,
    bool mixed_lengths_per_slot) {
    // Iterative deepening on the generation floor t. A configuration that
    // uses any string with gamma < t has total below t + (sum of the other
    // slots' per-length maxima); once the found maximum clears that bound
    // for every slot, the search was complete.
    Rational floor_t(-1);
    for (int round = 0; round < 8; ++round) {
        std::vector<std::vector<ScoredString>> lists;
        if (mixed_lengths_per_slot) {
            std::vector<ScoredString> all;
            for (int length = 1; length <= 3; ++length) {
                auto gen = scored_strings_with_contribution_at_least(floor_t, length);
                all.insert(all.end(), gen.strings.begin(), gen.strings.end());
            }
            std::sort(all.begin(), all.end(), gamma_order);
            lists.assign(1, std::move(all));
        } else {
            for (int length : slot_lengths) {
                lists.push_back(
                    scored_strings_with_contribution_at_least(floor_t, length).strings);
            }
        }
        if (!exclude.empty()) {
            std::vector<HJString> canon;
            canon.reserve(exclude.size());
            for (const auto& s : exclude) canon.push_back(canonical_string(s));
            for (auto& list : lists) {
                std::erase_if(list, [&](const ScoredString& e) {
                    return std::find(canon.begin(), canon.end(), e.string) != canon.end();
                });
            }
        }

        CoprimeSearch search;
        bool empty_list = false;
        for (std::size_t i = 0; i < slot_lengths.size(); ++i) {
            const auto* list = mixed_lengths_per_slot ? &lists[0] : &lists[i];
            if (list->empty()) empty_list = true;
            search.slot_candidates.push_back(list);
            bool same = i > 0 && (mixed_lengths_per_slot || slot_lengths[i] == slot_lengths[i - 1]);
            search.same_list_as_previous.push_back(same);
        }
        if (!empty_list) search.run();

        if (search.best) {
            bool complete = true;
            for (std::size_t i = 0; i < slot_lengths.size(); ++i) {
                Rational others;
                for (std::size_t j = 0; j < slot_lengths.size(); ++j) {
                    if (j == i) continue;
                    others += mixed_lengths_per_slot ? Rational(1, 2)
                                                     : max_gamma_for_length(slot_lengths[j]);
                }
                if (search.best->value < floor_t + others) {
                    complete = false;
                    break;
                }
            }
            if (complete) return search.best;
            // best - others is the exact completeness floor; step past it
            floor_t = search.best->value - Rational(slot_lengths.size() - 1, 2) - Rational(1);
        } else {
            floor_t = floor_t * Rational(2) - Rational(2);
        }
        if (floor_t < Rational(-60)) break;
    }
    return std::nullopt;
}

} // namespace

MaxRhsResult max_rhs(int r, const std::vector<HJString>& exclude) {
    if (r < 3) throw std::invalid_argument("max_rhs: requires r >= 3");
    std::vector<int> slots(static_cast<std::size_t>(r), 0);  // lengths free per slot
    auto best = coprime_max_over_slots(slots, exclude, /*mixed_lengths_per_slot=*/true);
    if (!best)
        throw std::logic_error("max_rhs: no coprime configuration found for r = " +
                               std::to_string(r));
    return *best;
}

std::optional<MaxRhsResult> max_coprime_rhs_for_partition(const std::vector<int>& partition) {
    if (partition.empty()) throw std::invalid_argument("max_coprime_rhs: empty partition");
    for (int part : partition) {
        if (part < 1 || part > 3)
            throw std::invalid_argument("max_coprime_rhs: parts must come from {1,2,3}");
    }
    return coprime_max_over_slots(partition, {}, /*mixed_lengths_per_slot=*/false);
}

namespace {

struct SlotCandidates {
    std::vector<std::vector<ScoredString>> lists;  // one per slot, gamma-sorted
    std::vector<bool> same_as_previous;
    std::vector<SlotBound> bounds;
};

SlotCandidates survivor_candidates(const CaseInstance& instance, const Rational& lhs) {
    SlotCandidates slots;
    const auto& parts = instance.partition;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational others;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j != i) others += max_gamma_for_length(parts[j]);
        }
        Rational threshold = lhs - others;
        auto gen = scored_strings_with_contribution_at_least(threshold, parts[i]);
        slots.bounds.push_back({parts[i], threshold, gen.sum_cap,
                                static_cast<int>(gen.strings.size())});
        slots.same_as_previous.push_back(i > 0 && parts[i] == parts[i - 1]);
        slots.lists.push_back(std::move(gen.strings));
    }
    return slots;
}

// Depth-first enumeration of every slot assignment with sum gamma >= lhs.
// Within a run of equal-length slots the candidate index is forced
// non-decreasing, so each multiset appears exactly once.
void collect_survivors(const SlotCandidates& slots, const Rational& lhs, std::size_t slot,
                       int min_index, const Rational& sum, std::vector<int>& chosen,
                       std::vector<std::pair<Configuration, Rational>>& out) {
    if (slot == slots.lists.size()) {
        if (sum >= lhs) {
            std::vector<HJString> strings;
            strings.reserve(chosen.size());
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                strings.push_back(slots.lists[i][static_cast<std::size_t>(chosen[i])].string);
            }
            out.emplace_back(Configuration(std::move(strings)), sum);
        }
        return;
    }
    const auto& candidates = slots.lists[slot];
    int start = slots.same_as_previous[slot] ? min_index : 0;
    for (int i = start; i < static_cast<int>(candidates.size()); ++i) {
        const auto& entry = candidates[static_cast<std::size_t>(i)];
        Rational optimistic = sum + entry.gamma;
        for (std::size_t j = slot + 1; j < slots.lists.size(); ++j) {
            if (slots.lists[j].empty()) return;
            optimistic += slots.lists[j][0].gamma;
        }
        if (optimistic < lhs) break;  // gamma-sorted: later candidates only lower
        chosen.push_back(i);
        collect_survivors(slots, lhs, slot + 1, i, sum + entry.gamma, chosen, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<std::pair<Configuration, Rational>> enumerate_survivors(const CaseInstance& instance) {
    Rational lhs = lhs_value(instance.numerics.c2, instance.r);
    SlotCandidates slots = survivor_candidates(instance, lhs);

    std::vector<std::pair<Configuration, Rational>> out;
    std::vector<int> chosen;
    bool any_empty = std::any_of(slots.lists.begin(), slots.lists.end(),
                                 [](const auto& l) { return l.empty(); });
    if (!any_empty) collect_survivors(slots, lhs, 0, 0, Rational(), chosen, out);

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return configuration_less(a.first, b.first);
    });
    return out;
}

CaseReport verify_instance(const CaseInstance& instance, const VerifyOptions& options) {
    CaseReport report{instance,
                      lhs_value(instance.numerics.c2, instance.r),
                      Rational(),
                      {},
                      std::nullopt,
                      {},
                      true};
    for (int part : instance.partition) report.rhs_upper_bound += max_gamma_for_length(part);

    SlotCandidates slots = survivor_candidates(instance, report.lhs);
    report.exhaustiveness = slots.bounds;

    EliminationOptions elim{options.positivity_filter};
    for (auto& [config, rhs] : enumerate_survivors(instance)) {
        auto outcome = eliminate(instance, config, elim);
        auto dets = determinants(config);
        Integer det_r = 1;
        for (const auto& d : dets) det_r *= d;
        SurvivorRecord record{std::move(config),
                              rhs,
                              det_r,
                              Rational(),
                              std::move(outcome.reason),
                              std::move(outcome.audit)};
        record.fksq = fstar_ksq(instance.numerics.ksq_prime, record.config);
        if (is_survives(record.reason)) report.eliminated = false;
        report.survivors.push_back(std::move(record));
    }

    report.max_coprime_rhs = max_coprime_rhs_for_partition(instance.partition);
    return report;
}

std::vector<CaseReport> verify_case(int c2, const VerifyOptions& options) {
    std::vector<CaseReport> reports;
    for (const auto& instance : case_instances_for(c2)) {
        reports.push_back(verify_instance(instance, options));
    }
    return reports;
}

Certificate verify_theorem(const VerifyOptions& options, std::optional<int> only_c2) {
    Certificate cert;
    cert.version = "hjcert/1";
    cert.positivity_filter = options.positivity_filter;
    cert.axioms = {
        {"orbifold-bmy-inequality",
         "Miyaoka's orbifold Bogomolov-Miyaoka-Yau inequality for a relatively minimal "
         "projective surface with quotient singularities and non-negative smooth-part Kodaira "
         "dimension: sum_p (e(E_p) - 1/|G_p|) <= c2(S') - K_S^2/3. Supplies the LHS <= RHS "
         "test in the by-contradiction frame (K_S^2 > 0 is part of that frame)."},
        {"no-fake-projective-plane",
         "c2(S') = 3 would make the surface a smooth fake projective plane with trivial first "
         "homology; Prasad and Yeung proved no such surface exists. The scan therefore starts "
         "at c2 = 4."},
        {"at-most-four-singular-points",
         "The surface has at most 4 singular points: with r >= 5 the pairwise-coprime local "
         "orders are at least the first r primes and sum 1/p_i <= r - 3 contradicts the "
         "inequality. Re-certified here by exact prime-reciprocal sums for r = 5..20."},
    };
    cert.c2_min = kC2Min;
    cert.c2_max = kC2Max;
    cert.max_points = kMaxSingularPoints;
    cert.scan_rationale =
        "c2 >= 4 by the fake-projective-plane exclusion; each of the at most 4 singular "
        "points contributes at most 3 exceptional curves, so b2 - 1 = c2 - 3 <= 12 and "
        "c2 <= 15. The scan over c2 = 4..15 with r <= 4 is therefore exhaustive.";

    cert.prime_recheck_r_min = 5;
    cert.prime_recheck_r_max = 20;
    cert.prime_recheck_ok = true;
    for (int r = cert.prime_recheck_r_min; r <= cert.prime_recheck_r_max; ++r) {
        if (!reciprocal_prime_bound(r).second) cert.prime_recheck_ok = false;
    }

    std::vector<int> c2_values;
    if (only_c2) {
        if (*only_c2 < kC2Min || *only_c2 > kC2Max)
            throw std::invalid_argument("verify_theorem: c2 filter outside [4, 15]");
        c2_values.push_back(*only_c2);
        cert.c2_min = cert.c2_max = *only_c2;
        cert.scan_rationale += " This certificate covers only the c2 = " +
                               std::to_string(*only_c2) + " group of that scan.";
    } else {
        for (int c2 = kC2Min; c2 <= kC2Max; ++c2) c2_values.push_back(c2);
    }

    std::vector<std::vector<CaseReport>> groups(c2_values.size());
    if (options.parallel && c2_values.size() > 1) {
        std::vector<std::future<std::vector<CaseReport>>> futures;
        futures.reserve(c2_values.size());
        for (int c2 : c2_values) {
            futures.push_back(std::async(std::launch::async,
                                         [c2, &options] { return verify_case(c2, options); }));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) groups[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < c2_values.size(); ++i) {
            groups[i] = verify_case(c2_values[i], options);
        }
    }

    cert.verdict = cert.prime_recheck_ok;
    for (auto& group : groups) {
        for (auto& report : group) {
            if (!report.eliminated) cert.verdict = false;
            cert.cases.push_back(std::move(report));
        }
    }
    return cert;
}

std::optional<SurvivorRecord> first_survivor(const Certificate& cert) {
    for (const auto& report : cert.cases) {
        for (const auto& record : report.survivors) {
            if (is_survives(record.reason)) return record;
        }
    }
    return std::nullopt;
}

} // namespace hjcert

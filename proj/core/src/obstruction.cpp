#include "hjcert/obstruction.hpp"

#include "hjcert/profile.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hjcert {

Configuration::Configuration(std::vector<HJString> strings) : strings_(std::move(strings)) {
    if (strings_.empty()) throw std::invalid_argument("Configuration: no singular points");
    for (auto& s : strings_) s = canonical_string(s);
    std::sort(strings_.begin(), strings_.end(), string_less);
}

std::vector<int> Configuration::lengths() const {
    std::vector<int> out;
    out.reserve(strings_.size());
    for (const auto& s : strings_) out.push_back(s.length());
    return out;
}

std::string Configuration::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < strings_.size(); ++i) {
        if (i) os << '+';
        os << '(' << strings_[i].str() << ')';
    }
    return os.str();
}

bool configuration_less(const Configuration& a, const Configuration& b) {
    const auto& sa = a.strings();
    const auto& sb = b.strings();
    for (std::size_t i = 0; i < std::min(sa.size(), sb.size()); ++i) {
        if (sa[i] == sb[i]) continue;
        return string_less(sa[i], sb[i]);
    }
    return sa.size() < sb.size();
}

bool is_survives(const EliminationReason& r) { return std::holds_alternative<Survives>(r); }

std::string reason_kind(const EliminationReason& r) {
    struct Visitor {
        std::string operator()(const InequalityViolated&) const { return "inequality-violated"; }
        std::string operator()(const CoprimalityFailed&) const { return "coprimality-failed"; }
        std::string operator()(const SquareObstruction&) const { return "square-obstruction"; }
        std::string operator()(const NonpositiveCanonicalSquare&) const {
            return "nonpositive-canonical-square";
        }
        std::string operator()(const Survives&) const { return "survives"; }
    };
    return std::visit(Visitor{}, r);
}

std::vector<Integer> determinants(const std::vector<HJString>& strings) {
    std::vector<Integer> dets;
    dets.reserve(strings.size());
    for (const auto& s : strings) dets.push_back(continuant(s));
    return dets;
}

std::vector<Integer> determinants(const Configuration& config) {
    return determinants(config.strings());
}

std::optional<CoprimalityFailed> pairwise_coprime(const std::vector<Integer>& dets) {
    if (dets.empty()) throw std::invalid_argument("pairwise_coprime: empty list");
    for (std::size_t i = 0; i < dets.size(); ++i) {
        for (std::size_t j = i + 1; j < dets.size(); ++j) {
            Integer g = int_gcd(dets[i], dets[j]);
            if (g > 1) return CoprimalityFailed{dets[i], dets[j], g};
        }
    }
    return std::nullopt;
}

Rational fstar_ksq(int ksq_prime, const Configuration& config) {
    Rational total(ksq_prime);
    for (const auto& s : config.strings()) total -= dp_squared(s);
    return total;
}

SquareCheck square_condition(const Integer& det_r, const Rational& fksq) {
    if (det_r <= 0) throw std::invalid_argument("square_condition: det_r must be positive");
    if (!fksq.is_positive())
        throw std::invalid_argument("square_condition: requires (f*K)^2 > 0; apply the positivity filter first");
    Rational product = Rational(det_r) * fksq;
    if (!product.is_integer()) return {false, Integer(0), product};
    Integer root;
    if (!is_perfect_square(product.num(), root)) return {false, Integer(0), product};
    return {true, root, product};
}

namespace {

// Square semantics that also cover nonpositive products, for the
// strict-paper path where the positivity filter is off: m^2 is never
// negative, and zero is 0^2.
SquareCheck square_condition_any_sign(const Integer& det_r, const Rational& fksq) {
    if (fksq.is_positive()) return square_condition(det_r, fksq);
    Rational product = Rational(det_r) * fksq;
    if (product.is_zero()) return {true, Integer(0), product};
    return {false, Integer(0), product};
}

} // namespace

EliminationOutcome eliminate_with(const Rational& lhs, int ksq_prime, const Configuration& config,
                                  const EliminationOptions& options) {
    EliminationOutcome out{Survives{}, {}};

    Rational rhs = rhs_value(config.strings());
    if (rhs < lhs) out.audit.emplace_back(InequalityViolated{lhs, rhs});

    auto dets = determinants(config);
    auto coprime_failure = pairwise_coprime(dets);
    if (coprime_failure) out.audit.emplace_back(*coprime_failure);

    Rational fksq = fstar_ksq(ksq_prime, config);
    bool positive = fksq.is_positive();
    if (!positive) out.audit.emplace_back(NonpositiveCanonicalSquare{fksq});

    Integer det_r = 1;
    for (const auto& d : dets) det_r *= d;
    SquareCheck square = square_condition_any_sign(det_r, fksq);
    if (!square.ok) out.audit.emplace_back(SquareObstruction{det_r, fksq, square.product});

    // Primary reason: first failing test in fixed order. The positivity
    // filter is skipped as a primary reason in strict-paper mode but stays
    // in the audit either way.
    if (rhs < lhs) {
        out.reason = InequalityViolated{lhs, rhs};
    } else if (coprime_failure) {
        out.reason = *coprime_failure;
    } else if (!positive && options.positivity_filter) {
        out.reason = NonpositiveCanonicalSquare{fksq};
    } else if (!square.ok) {
        out.reason = SquareObstruction{det_r, fksq, square.product};
    }
    return out;
}

EliminationOutcome eliminate(const CaseInstance& instance, const Configuration& config,
                             const EliminationOptions& options) {
    std::vector<int> lens = config.lengths();
    if (lens != instance.partition)
        throw std::invalid_argument("eliminate: configuration lengths " + config.str() +
                                    " do not match the case partition");
    return eliminate_with(lhs_value(instance.numerics.c2, instance.r),
                          instance.numerics.ksq_prime, config, options);
}

} // namespace hjcert

#include "hjcert/profile.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hjcert {

Integer continuant(const HJString& s) {
    Integer prev = 0;  // K_{-1}
    Integer cur = 1;   // K_0
    for (int n : s.entries()) {
        Integer next = Integer(n) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<Rational> solve_discrepancies(const HJString& s) {
    const auto& n = s.entries();
    const std::size_t k = n.size();

    // System matrix is tridiag(-1, n_j, -1), rhs_j = n_j - 2. The matrix is
    // (up to sign) the intersection matrix, hence nonsingular; n_j >= 2
    // keeps every pivot positive, so the sweep never divides by zero.
    std::vector<Rational> diag(k), rhs(k);
    for (std::size_t j = 0; j < k; ++j) {
        diag[j] = Rational(n[j]);
        rhs[j] = Rational(n[j] - 2);
    }
    for (std::size_t j = 1; j < k; ++j) {
        Rational m = Rational(-1) / diag[j - 1];
        diag[j] = diag[j] - m * Rational(-1);  // n_j - 1/diag_{j-1}
        rhs[j] = rhs[j] - m * rhs[j - 1];
    }
    std::vector<Rational> a(k);
    a[k - 1] = rhs[k - 1] / diag[k - 1];
    for (std::size_t j = k - 1; j-- > 0;) {
        a[j] = (rhs[j] + a[j + 1]) / diag[j];
    }
    return a;
}

Rational dp_squared(const HJString& s) {
    auto a = solve_discrepancies(s);
    Rational total;
    for (std::size_t j = 0; j < a.size(); ++j) {
        total += a[j] * Rational(s.entries()[j] - 2);
    }
    return -total;
}

Rational dp_squared_quadratic_form(const HJString& s) {
    return IntersectionMatrix(s).quadratic_form(solve_discrepancies(s));
}

Rational contribution(const HJString& s) {
    return Rational(Integer(1), continuant(s)) + dp_squared(s) / Rational(3);
}

HJString hj_expansion(long n, long q) {
    if (n < 2) throw std::invalid_argument("hj_expansion: n must be >= 2");
    if (q < 1 || q >= n) throw std::invalid_argument("hj_expansion: need 1 <= q < n");
    if (std::gcd(n, q) != 1)
        throw std::invalid_argument("hj_expansion: gcd(" + std::to_string(n) + "," +
                                    std::to_string(q) + ") != 1, not a singularity type");
    std::vector<int> entries;
    while (q > 0) {
        long c = (n + q - 1) / q;  // ceil(n/q)
        entries.push_back(static_cast<int>(c));
        long next_q = c * q - n;
        n = q;
        q = next_q;
    }
    return HJString(std::move(entries));
}

std::vector<Integer> SingularityProfile::scaled_discrepancies() const {
    std::vector<Integer> out;
    out.reserve(discrepancies.size());
    for (const auto& a : discrepancies) {
        Rational scaled = a * Rational(order);
        if (!scaled.is_integer())
            throw std::logic_error("scaled discrepancy not integral for (" + string.str() + ")");
        out.push_back(scaled.num());
    }
    return out;
}

SingularityProfile profile(const HJString& s) {
    SingularityProfile p{s, continuant(s), solve_discrepancies(s), Rational(), Rational()};

    Rational direct;
    for (std::size_t j = 0; j < p.discrepancies.size(); ++j) {
        direct += p.discrepancies[j] * Rational(s.entries()[j] - 2);
    }
    direct = -direct;
    Rational quad = IntersectionMatrix(s).quadratic_form(p.discrepancies);
    if (direct != quad)
        throw std::logic_error("D^2 routes disagree for (" + s.str() + "): " + direct.str() +
                               " vs " + quad.str());
    p.d_squared = direct;
    p.gamma = Rational(Integer(1), p.order) + p.d_squared / Rational(3);

    for (const auto& a : p.discrepancies) {
        if (a.is_negative() || a >= Rational(1))
            throw std::logic_error("discrepancy out of [0,1) for (" + s.str() + ")");
    }
    return p;
}

} // namespace hjcert

#include "hjcert/hj_string.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hjcert {

HJString::HJString(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("HJString: empty string");
    for (int n : entries_) {
        if (n < 2) {
            throw std::invalid_argument("HJString: entry " + std::to_string(n) +
                                        " below 2 (resolution would not be minimal)");
        }
    }
}

int HJString::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

HJString HJString::reversed() const {
    std::vector<int> rev(entries_.rbegin(), entries_.rend());
    return HJString(std::move(rev));
}

std::string HJString::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    return os.str();
}

HJString canonical_string(const HJString& s) {
    HJString rev = s.reversed();
    return rev.entries() < s.entries() ? rev : s;
}

bool string_less(const HJString& a, const HJString& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.entries() < b.entries();
}

IntersectionMatrix::IntersectionMatrix(const HJString& s)
    : size_(s.length()), diag_(s.entries()) {}

Integer IntersectionMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_)
        throw std::out_of_range("IntersectionMatrix::at");
    if (i == j) return Integer(-diag_[static_cast<std::size_t>(i)]);
    if (i == j + 1 || j == i + 1) return Integer(1);
    return Integer(0);
}

Integer IntersectionMatrix::leading_minor(int i) const {
    if (i < 1 || i > size_) throw std::out_of_range("IntersectionMatrix::leading_minor");
    // det of a tridiagonal block expands along the last row:
    //   d_i = (-n_i) d_{i-1} - d_{i-2}
    Integer prev2 = 1;  // empty block
    Integer prev1 = at(0, 0);
    for (int j = 1; j < i; ++j) {
        Integer cur = at(j, j) * prev1 - prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

Rational IntersectionMatrix::quadratic_form(const std::vector<Rational>& a) const {
    if (static_cast<int>(a.size()) != size_)
        throw std::invalid_argument("quadratic_form: size mismatch");
    Rational total;
    for (int j = 0; j < size_; ++j) {
        const auto k = static_cast<std::size_t>(j);
        total += Rational(at(j, j)) * a[k] * a[k];
        if (j + 1 < size_) {
            total += Rational(2) * a[k] * a[k + 1];
        }
    }
    return total;
}

} // namespace hjcert

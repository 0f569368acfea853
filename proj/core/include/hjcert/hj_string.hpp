#pragma once

// Hirzebruch-Jung strings: the resolution graph of one cyclic quotient
// surface singularity, recorded as the chain of self-intersection numbers
// (n_1, ..., n_k), every n_j >= 2.
//
// A string and its reverse describe the same singularity (the dual cyclic
// type). This layer keeps the two as distinct values; callers that must not
// double-count canonicalize with canonical_string().

#include "hjcert/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hjcert {

class HJString {
public:
    explicit HJString(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    int entry(int j) const { return entries_[static_cast<std::size_t>(j)]; }
    int sum() const;

    HJString reversed() const;
    bool is_palindromic() const { return entries_ == reversed().entries_; }

    // "n1,n2,n3"
    std::string str() const;

    friend bool operator==(const HJString& a, const HJString& b) = default;

private:
    std::vector<int> entries_;
};

// Lexicographically smaller of (s, reverse(s)); the representative used by
// the enumerator and by Configuration.
HJString canonical_string(const HJString& s);

// Ordering used for sorting configurations and reports: longer strings
// first, ties broken lexicographically on the entries. Matches the order in
// which case partitions list their parts (descending lengths).
bool string_less(const HJString& a, const HJString& b);

// Symmetric tridiagonal intersection matrix of a string: diagonal -n_j,
// super/sub-diagonal 1. Negative definite for every valid string.
class IntersectionMatrix {
public:
    explicit IntersectionMatrix(const HJString& s);

    int size() const { return size_; }
    Integer at(int i, int j) const;

    // Determinant of the leading principal i x i block, exact. Signs
    // alternate: (-1)^i * (positive continuant).
    Integer leading_minor(int i) const;

    // a^T M a for a rational vector a of matching size.
    Rational quadratic_form(const std::vector<Rational>& a) const;

private:
    int size_;
    std::vector<int> diag_;  // n_j (sign applied in at())
};

} // namespace hjcert

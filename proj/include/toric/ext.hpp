#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/linalg.hpp"
#include "toric/scalar.hpp"

namespace toric {

using IndexTuple = std::vector<int>;  // strictly increasing, entries in 1..n

/// Sorts `indices` in place and returns the permutation sign, or 0 when an
/// index repeats (alternating relation).
int sort_indices(IndexTuple& indices);

/// Homogeneous element of the exterior algebra over the n-dimensional basis
/// e_1..e_n. Terms are stored canonically: strictly increasing index tuples,
/// no zero coefficients. Two elements are equal iff their term maps are.
class ExtElement {
public:
    ExtElement(int ambient, int degree) : n_(ambient), degree_(degree) {}

    static ExtElement zero(int ambient, int degree) { return ExtElement(ambient, degree); }
    static ExtElement unit(int ambient);                   // degree-0 scalar 1
    static ExtElement basis_vector(int ambient, int i);    // e_i
    static ExtElement from_vector(const ExtVector& v);

    int ambient() const { return n_; }
    int degree() const { return degree_; }
    const std::map<IndexTuple, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c to the coefficient of the (not necessarily sorted) tuple.
    void add_term(IndexTuple indices, const Scalar& c);

    ExtElement operator*(const Scalar& c) const;
    ExtElement operator+(const ExtElement& o) const;
    ExtElement operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ExtElement& a, const ExtElement& b) { return !(a == b); }

    /// Canonical text form, e.g. "(1)e1^e2 + (-2i)e3"; "0" for zero and
    /// "(c)" for degree-0 elements. parse(str()) reproduces the element.
    std::string str() const;
    static ExtElement parse(int ambient, int degree, std::string_view text);

private:
    int n_;
    int degree_;
    std::map<IndexTuple, Scalar> terms_;
};

/// Exterior product with canonical sign normalization; repeated indices drop.
ExtElement wedge(const ExtElement& x, const ExtElement& y);

}  // namespace toric

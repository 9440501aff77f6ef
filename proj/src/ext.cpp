#include "toric/ext.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace toric {

int sort_indices(IndexTuple& indices) {
    // Insertion sort counting transpositions; tuples are short.
    int sign = 1;
    for (size_t i = 1; i < indices.size(); ++i) {
        int v = indices[i];
        size_t j = i;
        while (j > 0 && indices[j - 1] > v) {
            indices[j] = indices[j - 1];
            --j;
            sign = -sign;
        }
        indices[j] = v;
    }
    for (size_t i = 1; i < indices.size(); ++i)
        if (indices[i] == indices[i - 1]) return 0;
    return sign;
}

ExtElement ExtElement::unit(int ambient) {
    ExtElement e(ambient, 0);
    e.terms_[{}] = Scalar(1);
    return e;
}

ExtElement ExtElement::basis_vector(int ambient, int i) {
    if (i < 1 || i > ambient) throw std::out_of_range("ext: basis index out of range");
    ExtElement e(ambient, 1);
    e.terms_[{i}] = Scalar(1);
    return e;
}

ExtElement ExtElement::from_vector(const ExtVector& v) {
    ExtElement e(static_cast<int>(v.dim()), 1);
    for (size_t i = 0; i < v.dim(); ++i)
        if (!v.coords[i].is_zero()) e.terms_[{static_cast<int>(i) + 1}] = v.coords[i];
    return e;
}

void ExtElement::add_term(IndexTuple indices, const Scalar& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(indices.size()) != degree_)
        throw std::invalid_argument("ext: term degree mismatch");
    for (int i : indices)
        if (i < 1 || i > n_) throw std::out_of_range("ext: index out of range");
    int sign = sort_indices(indices);
    if (sign == 0) return;
    Scalar& slot = terms_[indices];
    slot += sign < 0 ? -c : c;
    if (slot.is_zero()) terms_.erase(indices);
}

ExtElement ExtElement::operator*(const Scalar& c) const {
    ExtElement out(n_, degree_);
    if (c.is_zero()) return out;
    for (const auto& [idx, coef] : terms_) out.terms_[idx] = coef * c;
    return out;
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ext: ambient dimension mismatch");
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero())
        throw std::invalid_argument("ext: degree mismatch in sum");
    ExtElement out = is_zero() ? o : *this;
    const ExtElement& other = is_zero() ? *this : o;
    for (const auto& [idx, coef] : other.terms_) {
        Scalar& slot = out.terms_[idx];
        slot += coef;
        if (slot.is_zero()) out.terms_.erase(idx);
    }
    return out;
}

ExtElement wedge(const ExtElement& x, const ExtElement& y) {
    if (x.ambient() != y.ambient())
        throw std::invalid_argument("ext: ambient dimension mismatch in wedge");
    ExtElement out(x.ambient(), x.degree() + y.degree());
    for (const auto& [xi, xc] : x.terms()) {
        for (const auto& [yi, yc] : y.terms()) {
            IndexTuple merged = xi;
            merged.insert(merged.end(), yi.begin(), yi.end());
            out.add_term(std::move(merged), xc * yc);
        }
    }
    return out;
}

std::string ExtElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, coef] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << coef.str() << ')';
        for (size_t i = 0; i < idx.size(); ++i) os << (i ? "^e" : "e") << idx[i];
    }
    return os.str();
}

ExtElement ExtElement::parse(int ambient, int degree, std::string_view text) {
    ExtElement out(ambient, degree);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (text.substr(pos) == "0") return out;
    while (pos < text.size()) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '(') throw std::invalid_argument("ext: expected '(' in term");
        size_t close = text.find(')', pos);
        if (close == std::string_view::npos) throw std::invalid_argument("ext: unbalanced '('");
        Scalar coef = Scalar::parse(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        IndexTuple idx;
        while (pos < text.size() && (text[pos] == 'e' || text[pos] == '^')) {
            if (text[pos] == '^') ++pos;
            if (pos >= text.size() || text[pos] != 'e')
                throw std::invalid_argument("ext: expected 'e' after '^'");
            ++pos;
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("ext: expected index digits");
            idx.push_back(std::stoi(std::string(text.substr(start, pos - start))));
        }
        out.add_term(std::move(idx), coef);
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != '+') throw std::invalid_argument("ext: expected '+' between terms");
            ++pos;
        }
    }
    return out;
}

}  // namespace toric

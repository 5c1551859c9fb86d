// The coefficient algebra A: a finite-dimensional commutative associative
// unital algebra over Q, presented by a basis, a distinguished unit basis
// element and a structure-constant table. Validation of the axioms is total
// (every basis pair/triple is checked, nothing is sampled).

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weyl/multiset.hpp"
#include "weyl/rational.hpp"

namespace weyl {

// Sparse coordinate vector over the basis of an AlgebraSpec.
struct AlgebraElement {
    std::map<int, Rational> coords;  // no explicit zeros

    bool is_zero() const { return coords.empty(); }

    void add_term(int index, const Rational& value) {
        if (value == 0) return;
        auto [it, inserted] = coords.emplace(index, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) coords.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& other) {
        for (const auto& [index, value] : other.coords) add_term(index, value);
        return *this;
    }

    friend AlgebraElement operator*(const Rational& scale, AlgebraElement element) {
        if (scale == 0) return AlgebraElement{};
        for (auto& [index, value] : element.coords) value *= scale;
        return element;
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

struct algebra_error : std::runtime_error {
    enum class kind { schema, commutativity, associativity, unit };
    kind which;
    algebra_error(kind k, const std::string& message) : std::runtime_error(message), which(k) {}
};

class AlgebraSpec {
public:
    AlgebraSpec(std::vector<std::string> basis_labels, int unit_index,
                std::vector<std::vector<AlgebraElement>> structure)
        : labels_(std::move(basis_labels)), unit_(unit_index), mul_(std::move(structure)) {
        check_shape();
    }

    int dim() const { return static_cast<int>(labels_.size()); }
    int unit_index() const { return unit_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

    int index_of(const std::string& label) const {
        for (int i = 0; i < dim(); ++i)
            if (labels_[static_cast<std::size_t>(i)] == label) return i;
        throw std::invalid_argument("AlgebraSpec: unknown basis label '" + label + "'");
    }

    // coordinates of b_i * b_j
    const AlgebraElement& basis_product(int i, int j) const {
        return mul_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    }

    AlgebraElement basis_element(int i) const {
        if (i < 0 || i >= dim()) throw std::invalid_argument("AlgebraSpec: basis index out of range");
        AlgebraElement e;
        e.add_term(i, 1);
        return e;
    }

    AlgebraElement unit() const { return basis_element(unit_); }

    // Commutativity, associativity and the unit law, checked exactly on every
    // basis pair/triple. Throws algebra_error naming the offending indices.
    void validate() const {
        const int d = dim();
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (basis_product(i, j) != basis_product(j, i))
                    throw algebra_error(algebra_error::kind::commutativity,
                                        "algebra is not commutative at basis pair (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        for (int j = 0; j < d; ++j)
            if (basis_product(unit_, j) != basis_element(j))
                throw algebra_error(algebra_error::kind::unit,
                                    "unit law fails at basis element " + std::to_string(j));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    AlgebraElement left, right;
                    for (const auto& [e, c] : basis_product(i, j).coords)
                        left += c * basis_product(e, k);
                    for (const auto& [e, c] : basis_product(j, k).coords)
                        right += c * basis_product(i, e);
                    if (left != right)
                        throw algebra_error(algebra_error::kind::associativity,
                                            "algebra is not associative at basis triple (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
                }
    }

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

private:
    void check_shape() const {
        const auto d = labels_.size();
        if (d == 0) throw algebra_error(algebra_error::kind::schema, "empty basis");
        if (unit_ < 0 || static_cast<std::size_t>(unit_) >= d)
            throw algebra_error(algebra_error::kind::schema, "unit_index out of range");
        for (const auto& label : labels_)
            if (label.empty() || label.find_first_of(",;:") != std::string::npos)
                throw algebra_error(algebra_error::kind::schema,
                                    "basis label '" + label +
                                        "' is empty or contains a literal separator");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (labels_[i] == labels_[j])
                    throw algebra_error(algebra_error::kind::schema,
                                        "duplicate basis label '" + labels_[i] + "'");
        if (mul_.size() != d)
            throw algebra_error(algebra_error::kind::schema, "structure table has wrong row count");
        for (const auto& row : mul_) {
            if (row.size() != d)
                throw algebra_error(algebra_error::kind::schema, "structure table has a ragged row");
            for (const auto& entry : row)
                for (const auto& [index, value] : entry.coords)
                    if (index < 0 || static_cast<std::size_t>(index) >= d)
                        throw algebra_error(algebra_error::kind::schema,
                                            "structure constant index out of range");
        }
    }

    std::vector<std::string> labels_;
    int unit_;
    std::vector<std::vector<AlgebraElement>> mul_;  // mul_[i][j] = coords of b_i b_j
};

// Q[t]/(t^N) with basis {1, t, ..., t^(N-1)}.
inline AlgebraSpec trunc_poly(int N) {
    if (N < 1) throw std::invalid_argument("trunc_poly: N must be >= 1");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        if (i == 0)
            labels.emplace_back("1");
        else if (i == 1)
            labels.emplace_back("t");
        else
            labels.emplace_back("t^" + std::to_string(i));
    }
    std::vector<std::vector<AlgebraElement>> mul(static_cast<std::size_t>(N),
                                                 std::vector<AlgebraElement>(static_cast<std::size_t>(N)));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (i + j < N) mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].add_term(i + j, 1);
    return AlgebraSpec(std::move(labels), 0, std::move(mul));
}

inline AlgebraElement alg_mul(const AlgebraSpec& spec, const AlgebraElement& x,
                              const AlgebraElement& y) {
    AlgebraElement result;
    for (const auto& [i, a] : x.coords)
        for (const auto& [j, b] : y.coords) result += (a * b) * spec.basis_product(i, j);
    return result;
}

// pi(psi) = prod_i b_i^(psi(i)); pi(0) = 1. May evaluate to 0 in a nilpotent
// algebra, which downstream code treats as the zero element, not an error.
inline AlgebraElement pi(const AlgebraSpec& spec, const Multiset<int>& psi) {
    AlgebraElement product = spec.unit();
    for (const auto& [index, mult] : psi.entries()) {
        const AlgebraElement factor = spec.basis_element(index);
        for (std::int64_t c = 0; c < mult; ++c) {
            product = alg_mul(spec, product, factor);
            if (product.is_zero()) return product;
        }
    }
    return product;
}

}  // namespace weyl

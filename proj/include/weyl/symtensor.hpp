// Tensor powers (V (x) A)^(x)m as sparse rational combinations of slot
// sequences, the S_m orbit-sum symmetrization (full group, no 1/m!
// normalization), the w/v vectors attached to a tuple (phi_1,...,phi_n) and
// the dimension count for the symmetric subspace.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/multiset.hpp"
#include "weyl/rational.hpp"

namespace weyl {

// One tensor factor v_weight (x) b_coeff of V (x) A.
struct SlotIndex {
    int weight = 1;  // 1..n
    int coeff = 0;   // basis index of A

    friend bool operator==(const SlotIndex&, const SlotIndex&) = default;
    friend auto operator<=>(const SlotIndex&, const SlotIndex&) = default;
};

using SlotSequence = std::vector<SlotIndex>;

class Tensor {
public:
    using term_map = std::map<SlotSequence, Rational>;

    explicit Tensor(int rank = 0) : rank_(rank) {
        if (rank < 0) throw std::invalid_argument("Tensor: negative rank");
    }

    // the rank-0 scalar c (a single empty-sequence term)
    static Tensor scalar(const Rational& c) {
        Tensor t(0);
        t.add_term({}, c);
        return t;
    }

    static Tensor pure(SlotSequence slots, const Rational& c = 1) {
        Tensor t(static_cast<int>(slots.size()));
        t.add_term(std::move(slots), c);
        return t;
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const term_map& terms() const { return terms_; }

    Rational coeff(const SlotSequence& slots) const {
        auto it = terms_.find(slots);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(SlotSequence slots, const Rational& value) {
        if (static_cast<int>(slots.size()) != rank_)
            throw std::invalid_argument("Tensor::add_term: slot count != rank");
        if (value == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(slots), value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& other) {
        if (other.rank_ != rank_) throw std::invalid_argument("Tensor: rank mismatch in +=");
        for (const auto& [slots, value] : other.terms_) add_term(slots, value);
        return *this;
    }

    friend Tensor operator+(Tensor lhs, const Tensor& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend Tensor operator*(const Rational& scale, Tensor t) {
        if (scale == 0) return Tensor(t.rank_);
        for (auto& [slots, value] : t.terms_) value *= scale;
        return t;
    }

    friend Tensor operator-(const Tensor& lhs, const Tensor& rhs) {
        Tensor result = lhs;
        result += rational(-1) * rhs;
        return result;
    }

    friend bool operator==(const Tensor&, const Tensor&) = default;

private:
    int rank_;
    term_map terms_;  // no zero coefficients; canonical slot-sequence order
};

// (phi_1, ..., phi_n): one multiset over the basis of A per weight index.
struct BasisTuple {
    std::vector<Multiset<int>> parts;

    int n() const { return static_cast<int>(parts.size()); }

    std::int64_t total_size() const {
        std::int64_t total = 0;
        for (const auto& part : parts) total += part.size();
        return total;
    }

    friend bool operator==(const BasisTuple&, const BasisTuple&) = default;
    friend auto operator<=>(const BasisTuple& lhs, const BasisTuple& rhs) {
        return lhs.parts <=> rhs.parts;
    }
};

// Full S_m orbit sum. Computed per distinct arrangement, scaled by the product
// of slot-multiplicity factorials; equal to the literal sum over all m!
// permutations.
inline Tensor symmetrize(const Tensor& t) {
    Tensor result(t.rank());
    for (const auto& [slots, value] : t.terms()) {
        SlotSequence sorted = slots;
        std::sort(sorted.begin(), sorted.end());
        Integer repeats(1);
        std::size_t run_start = 0;
        for (std::size_t i = 1; i <= sorted.size(); ++i)
            if (i == sorted.size() || sorted[i] != sorted[run_start]) {
                repeats *= factorial(i - run_start);
                run_start = i;
            }
        const Rational scaled = value * Rational(repeats);
        SlotSequence arrangement = sorted;
        do {
            result.add_term(arrangement, scaled);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    return result;
}

// w(phi_1,...,phi_n): the pure tensor whose slots are grouped by weight index
// ascending and by basis index ascending within each part.
inline Tensor w_vector(const BasisTuple& tuple) {
    SlotSequence slots;
    slots.reserve(static_cast<std::size_t>(tuple.total_size()));
    for (int i = 0; i < tuple.n(); ++i)
        for (const auto& [coeff_index, mult] : tuple.parts[static_cast<std::size_t>(i)].entries())
            for (std::int64_t c = 0; c < mult; ++c) slots.push_back({i + 1, coeff_index});
    return Tensor::pure(std::move(slots));
}

// v(phi_1,...,phi_n): the orbit of w(phi_1,...,phi_n) under S_m, summed over
// DISTINCT arrangements. The full orbit sum with repeats is symmetrize(w);
// the two differ by the product of slot-multiplicity factorials, and the
// q-element identities hold exactly for the distinct-arrangement sum
// (q_i(0, 2chi_a) sends (v_1 (x) 1)^(x)2 to (v_1 (x) a)^(x)2 once, not twice).
inline Tensor v_vector(const BasisTuple& tuple) {
    const Tensor w = w_vector(tuple);
    Tensor result(w.rank());
    for (const auto& [slots, value] : w.terms()) {
        SlotSequence arrangement = slots;
        std::sort(arrangement.begin(), arrangement.end());
        do {
            result.add_term(arrangement, value);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    return result;
}

// Fixed by every adjacent-slot transposition (hence by all of S_m).
inline bool is_symmetric(const Tensor& t) {
    for (const auto& [slots, value] : t.terms())
        for (std::size_t p = 0; p + 1 < slots.size(); ++p) {
            if (slots[p] == slots[p + 1]) continue;
            SlotSequence swapped = slots;
            std::swap(swapped[p], swapped[p + 1]);
            if (t.coeff(swapped) != value) return false;
        }
    return true;
}

// dim S^m of an (n*d)-dimensional space: C(n*d + m - 1, m).
inline Integer sym_dim(int n, int d, int m) {
    if (n < 1 || d < 1 || m < 0) throw std::invalid_argument("sym_dim: bad parameters");
    return binomial(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d) +
                        static_cast<std::uint64_t>(m) - 1,
                    static_cast<std::uint64_t>(m));
}

// (v_1 (x) 1)^(x)m, the image of the highest weight vector.
inline Tensor highest_weight_tensor(const AlgebraSpec& spec, int m) {
    if (m < 0) throw std::invalid_argument("highest_weight_tensor: negative rank");
    return Tensor::pure(SlotSequence(static_cast<std::size_t>(m), SlotIndex{1, spec.unit_index()}));
}

}  // namespace weyl

// The enveloping algebra U(sl_n (x) A) as formal rational combinations of
// words in current generators z (x) b, the coproduct into U^(x)k and the
// action on tensor powers. Words are never rewritten into a normal form;
// identities that hold "in U" are checked downstream at the level of module
// actions.
//
// A word acts with its rightmost letter first. Each letter acts by the
// Leibniz rule across slots, which matches the componentwise action of its
// k-fold coproduct.

#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/rational.hpp"
#include "weyl/sln.hpp"
#include "weyl/symtensor.hpp"

namespace weyl {

// The pair (n, A) every envelope/tensor computation is relative to.
struct MapAlgebra {
    int n;
    AlgebraSpec coeff;

    MapAlgebra(int n_, AlgebraSpec coeff_) : n(n_), coeff(std::move(coeff_)) {
        if (n < 2) throw std::invalid_argument("MapAlgebra: n must be >= 2");
    }
};

struct CurrentGenerator {
    ChevalleyGenerator lie;
    int coeff = 0;  // basis index of A

    friend bool operator==(const CurrentGenerator&, const CurrentGenerator&) = default;
    friend auto operator<=>(const CurrentGenerator&, const CurrentGenerator&) = default;
};

using Word = std::vector<CurrentGenerator>;  // empty word = 1

class UElement {
public:
    using term_map = std::map<Word, Rational>;

    UElement() = default;

    static UElement one() {
        UElement u;
        u.add_term(Word{}, 1);
        return u;
    }

    static UElement single(Word word, const Rational& c = 1) {
        UElement u;
        u.add_term(std::move(word), c);
        return u;
    }

    bool is_zero() const { return terms_.empty(); }
    const term_map& terms() const { return terms_; }

    Rational coeff(const Word& word) const {
        auto it = terms_.find(word);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(Word word, const Rational& value) {
        if (value == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(word), value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) terms_.erase(it);
        }
    }

    UElement& operator+=(const UElement& other) {
        for (const auto& [word, value] : other.terms_) add_term(word, value);
        return *this;
    }

    friend UElement operator+(UElement lhs, const UElement& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend UElement operator*(const Rational& scale, UElement u) {
        if (scale == 0) return UElement{};
        for (auto& [word, value] : u.terms_) value *= scale;
        return u;
    }

    friend bool operator==(const UElement&, const UElement&) = default;

private:
    term_map terms_;  // no zero coefficients; words under their natural order
};

// Element of U^(x)k: rational combinations of k-tuples of words.
class TensorUElement {
public:
    using term_map = std::map<std::vector<Word>, Rational>;

    explicit TensorUElement(int arity) : arity_(arity) {
        if (arity < 1) throw std::invalid_argument("TensorUElement: arity must be >= 1");
    }

    int arity() const { return arity_; }
    const term_map& terms() const { return terms_; }

    void add_term(std::vector<Word> tuple, const Rational& value) {
        if (static_cast<int>(tuple.size()) != arity_)
            throw std::invalid_argument("TensorUElement::add_term: tuple size != arity");
        if (value == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(tuple), value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TensorUElement& operator+=(const TensorUElement& other) {
        if (other.arity_ != arity_) throw std::invalid_argument("TensorUElement: arity mismatch");
        for (const auto& [tuple, value] : other.terms_) add_term(tuple, value);
        return *this;
    }

    friend bool operator==(const TensorUElement&, const TensorUElement&) = default;

private:
    int arity_;
    term_map terms_;
};

// z (x) a expanded over the coordinates of a; gen(z, 0) is the zero element.
inline UElement gen(const ChevalleyGenerator& z, const AlgebraElement& a) {
    UElement u;
    for (const auto& [index, value] : a.coords) u.add_term(Word{CurrentGenerator{z, index}}, value);
    return u;
}

// Bilinear word concatenation, u's letters to the left of v's.
inline UElement u_mul(const UElement& u, const UElement& v) {
    UElement result;
    for (const auto& [uw, uc] : u.terms())
        for (const auto& [vw, vc] : v.terms()) {
            Word word = uw;
            word.insert(word.end(), vw.begin(), vw.end());
            result.add_term(std::move(word), uc * vc);
        }
    return result;
}

namespace detail {

// Delta^(k-1) of a single word: the product of its letters' k-placement sums,
// built letter by letter so each component keeps its letters in word order.
inline TensorUElement word_coproduct(const Word& word, int k) {
    TensorUElement result(k);
    result.add_term(std::vector<Word>(static_cast<std::size_t>(k)), 1);
    for (const CurrentGenerator& letter : word) {
        TensorUElement next(k);
        for (const auto& [tuple, value] : result.terms())
            for (int j = 0; j < k; ++j) {
                std::vector<Word> placed = tuple;
                placed[static_cast<std::size_t>(j)].push_back(letter);
                next.add_term(std::move(placed), value);
            }
        result = std::move(next);
    }
    return result;
}

// (1^(x)(k-1) (x) Delta^1) applied to an element of U^(x)k.
inline TensorUElement expand_last(const TensorUElement& u) {
    TensorUElement result(u.arity() + 1);
    for (const auto& [tuple, value] : u.terms()) {
        const TensorUElement split = word_coproduct(tuple.back(), 2);
        for (const auto& [pair, c] : split.terms()) {
            std::vector<Word> extended(tuple.begin(), tuple.end() - 1);
            extended.push_back(pair[0]);
            extended.push_back(pair[1]);
            result.add_term(std::move(extended), value * c);
        }
    }
    return result;
}

}  // namespace detail

// Delta^(k-1): U -> U^(x)k; the algebra-morphism extension of
// z (x) a  |->  sum_j 1^(x)j (x) (z(x)a) (x) 1^(x)(k-1-j).
inline TensorUElement coproduct(const UElement& u, int k) {
    TensorUElement result(k);
    for (const auto& [word, value] : u.terms()) {
        TensorUElement expanded = detail::word_coproduct(word, k);
        for (const auto& [tuple, c] : expanded.terms()) result.add_term(tuple, value * c);
    }
    return result;
}

namespace detail {

// One letter acting on one tensor term by the Leibniz rule.
inline void act_letter_on_term(const MapAlgebra& ctx, const CurrentGenerator& letter,
                               const SlotSequence& slots, const Rational& value, Tensor& out) {
    for (std::size_t p = 0; p < slots.size(); ++p) {
        const auto moved = act_natural(letter.lie, slots[p].weight, ctx.n);
        if (!moved) continue;
        const auto& product = ctx.coeff.basis_product(letter.coeff, slots[p].coeff);
        for (const auto& [index, c] : product.coords) {
            SlotSequence next = slots;
            next[p] = SlotIndex{moved->first, index};
            out.add_term(std::move(next), value * rational(moved->second) * c);
        }
    }
}

inline Tensor act_word(const MapAlgebra& ctx, const Word& word, const Tensor& t) {
    Tensor current = t;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        Tensor next(current.rank());
        for (const auto& [slots, value] : current.terms())
            act_letter_on_term(ctx, *it, slots, value, next);
        current = std::move(next);
    }
    return current;
}

// A word acting on a single V (x) A basis slot.
inline std::map<SlotIndex, Rational> act_word_on_slot(const MapAlgebra& ctx, const Word& word,
                                                      const SlotIndex& slot) {
    std::map<SlotIndex, Rational> current{{slot, Rational(1)}};
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        std::map<SlotIndex, Rational> next;
        for (const auto& [s, value] : current) {
            const auto moved = act_natural(it->lie, s.weight, ctx.n);
            if (!moved) continue;
            const auto& product = ctx.coeff.basis_product(it->coeff, s.coeff);
            for (const auto& [index, c] : product.coords) {
                const SlotIndex target{moved->first, index};
                auto [entry, inserted] =
                    next.emplace(target, value * rational(moved->second) * c);
                if (!inserted) {
                    entry->second += value * rational(moved->second) * c;
                    if (entry->second == 0) next.erase(entry);
                }
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace detail

// u acting on (V (x) A)^(x)m through Delta^(m-1) followed by coordinatewise
// module actions.
inline Tensor act(const MapAlgebra& ctx, const UElement& u, const Tensor& t) {
    Tensor result(t.rank());
    for (const auto& [word, value] : u.terms()) result += value * detail::act_word(ctx, word, t);
    return result;
}

// An element of U^(x)k acting componentwise: tuple component j acts on slot j.
inline Tensor act(const MapAlgebra& ctx, const TensorUElement& u, const Tensor& t) {
    if (u.arity() != t.rank())
        throw std::invalid_argument("act: tensor rank differs from coproduct arity");
    Tensor result(t.rank());
    for (const auto& [tuple, uvalue] : u.terms())
        for (const auto& [slots, tvalue] : t.terms()) {
            std::vector<std::pair<SlotSequence, Rational>> partial{{SlotSequence{}, uvalue * tvalue}};
            for (std::size_t j = 0; j < slots.size() && !partial.empty(); ++j) {
                const auto images = detail::act_word_on_slot(ctx, tuple[j], slots[j]);
                std::vector<std::pair<SlotSequence, Rational>> extended;
                extended.reserve(partial.size() * images.size());
                for (const auto& [prefix, value] : partial)
                    for (const auto& [slot, c] : images) {
                        SlotSequence next = prefix;
                        next.push_back(slot);
                        extended.emplace_back(std::move(next), value * c);
                    }
                partial = std::move(extended);
            }
            for (auto& [sequence, value] : partial) result.add_term(std::move(sequence), value);
        }
    return result;
}

}  // namespace weyl

// Finitely supported multisets (multiplicity functions) over an ordered key
// domain, together with the counting functions and enumerations the q-element
// recursion consumes: submultisets, multinomial coefficients and ordered
// k-part compositions.
//
// All enumeration orders are deterministic: a multiset is identified with its
// multiplicity vector over ascending keys, and lists of multisets are emitted
// in lexicographic order of those vectors.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

template <typename Key>
class Multiset {
public:
    using map_type = std::map<Key, std::int64_t>;

    Multiset() = default;

    static Multiset characteristic(const Key& key) {
        Multiset m;
        m.entries_.emplace(key, 1);
        return m;
    }

    // multiplicity * characteristic(key); the zero multiple is the empty multiset
    static Multiset scaled(const Key& key, std::int64_t multiplicity) {
        Multiset m;
        m.add(key, multiplicity);
        return m;
    }

    std::int64_t count(const Key& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second;
    }

    std::int64_t size() const {
        std::int64_t total = 0;
        for (const auto& [key, mult] : entries_) total += mult;
        return total;
    }

    bool empty() const { return entries_.empty(); }
    const map_type& entries() const { return entries_; }

    void add(const Key& key, std::int64_t multiplicity = 1) {
        if (multiplicity < 0) throw std::invalid_argument("Multiset::add: negative multiplicity");
        if (multiplicity == 0) return;
        entries_[key] += multiplicity;
    }

    Multiset& operator+=(const Multiset& other) {
        for (const auto& [key, mult] : other.entries_) entries_[key] += mult;
        return *this;
    }

    friend Multiset operator+(Multiset lhs, const Multiset& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend bool operator==(const Multiset&, const Multiset&) = default;
    friend auto operator<=>(const Multiset& lhs, const Multiset& rhs) {
        return lhs.entries_ <=> rhs.entries_;
    }

private:
    map_type entries_;  // no zero multiplicities stored
};

template <typename Key>
bool is_subset(const Multiset<Key>& psi, const Multiset<Key>& chi) {
    for (const auto& [key, mult] : psi.entries())
        if (mult > chi.count(key)) return false;
    return true;
}

template <typename Key>
Multiset<Key> subtract(const Multiset<Key>& chi, const Multiset<Key>& psi) {
    if (!is_subset(psi, chi))
        throw std::invalid_argument("subtract: subtrahend is not a submultiset");
    Multiset<Key> result;
    for (const auto& [key, mult] : chi.entries()) result.add(key, mult - psi.count(key));
    return result;
}

// All submultisets of chi, each exactly once, in lexicographic order of the
// multiplicity vector over ascending keys. List length = prod_s (chi(s)+1).
template <typename Key>
std::vector<Multiset<Key>> submultisets(const Multiset<Key>& chi) {
    std::vector<Multiset<Key>> result;
    result.emplace_back();
    for (const auto& [key, mult] : chi.entries()) {
        std::vector<Multiset<Key>> extended;
        extended.reserve(result.size() * static_cast<std::size_t>(mult + 1));
        for (const auto& prefix : result)
            for (std::int64_t c = 0; c <= mult; ++c) {
                Multiset<Key> next = prefix;
                next.add(key, c);
                extended.push_back(std::move(next));
            }
        result = std::move(extended);
    }
    return result;
}

// |psi|! / prod_s psi(s)!
template <typename Key>
Integer multinomial(const Multiset<Key>& psi) {
    Integer result = factorial(static_cast<std::uint64_t>(psi.size()));
    for (const auto& [key, mult] : psi.entries())
        result /= factorial(static_cast<std::uint64_t>(mult));
    return result;
}

namespace detail {

template <typename Key>
void compositions_rec(const Multiset<Key>& rest, int k,
                      std::vector<Multiset<Key>>& prefix,
                      std::vector<std::vector<Multiset<Key>>>& out) {
    if (k == 1) {
        prefix.push_back(rest);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (const auto& part : submultisets(rest)) {
        prefix.push_back(part);
        compositions_rec(subtract(rest, part), k - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

// comp_k(chi): every ordered k-tuple of multisets summing to chi, each exactly
// once. List length = prod_s C(chi(s)+k-1, k-1).
template <typename Key>
std::vector<std::vector<Multiset<Key>>> compositions(const Multiset<Key>& chi, int k) {
    if (k < 1) throw std::invalid_argument("compositions: k must be >= 1");
    std::vector<std::vector<Multiset<Key>>> out;
    std::vector<Multiset<Key>> prefix;
    detail::compositions_rec(chi, k, prefix, out);
    return out;
}

}  // namespace weyl

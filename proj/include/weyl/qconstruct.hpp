// The recursive elements q_i(phi, chi) of U(sl_n (x) A) and the ordered
// product q(phi_1, ..., phi_n) that generates the basis of W_A(m omega_1).
//
// The recursion follows the displayed clauses literally, including the
// asymmetry in the psi range: the phi = 0 clause sums over nonempty
// submultisets of chi, the |phi| >= 1 clause over all of them. Each step
// strictly decreases |phi| + |chi|, and letters whose A-coefficient
// multiplies to zero contribute nothing.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/envelope.hpp"
#include "weyl/multiset.hpp"
#include "weyl/rational.hpp"
#include "weyl/sln.hpp"
#include "weyl/symtensor.hpp"

namespace weyl {

// Memoizes q_i(phi, chi) per coefficient algebra. q-elements grow
// combinatorially, so suites and basis enumerations share one cache.
class QCache {
public:
    explicit QCache(const AlgebraSpec& spec) : spec_(&spec) {}

    const AlgebraSpec& spec() const { return *spec_; }

    const UElement& q_single(int i, const Multiset<int>& phi, const Multiset<int>& chi) {
        if (i < 1) throw std::invalid_argument("q_single: i must be >= 1");
        const Key key{i, phi, chi};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        UElement value = compute(i, phi, chi);
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

    // The factors of q(phi_1,...,phi_n), leftmost first:
    //   q_{n-1}(phi_n, phi_{n-1}),
    //   q_i((|phi_{i+1}| + ... + |phi_n|) chi_unit, phi_i)  for i = n-2 .. 1.
    std::vector<UElement> q_factors(const BasisTuple& tuple) {
        const int n = tuple.n();
        if (n < 2) throw std::invalid_argument("q_factors: tuple needs at least two parts");
        const auto& parts = tuple.parts;
        std::vector<UElement> factors;
        factors.reserve(static_cast<std::size_t>(n - 1));
        factors.push_back(q_single(n - 1, parts[static_cast<std::size_t>(n - 1)],
                                   parts[static_cast<std::size_t>(n - 2)]));
        std::int64_t tail = parts[static_cast<std::size_t>(n - 1)].size() +
                            parts[static_cast<std::size_t>(n - 2)].size();
        for (int i = n - 2; i >= 1; --i) {
            factors.push_back(q_single(i, Multiset<int>::scaled(spec_->unit_index(), tail),
                                       parts[static_cast<std::size_t>(i - 1)]));
            tail += parts[static_cast<std::size_t>(i - 1)].size();
        }
        return factors;
    }

    UElement q_tuple(const BasisTuple& tuple) {
        UElement product = UElement::one();
        for (const auto& factor : q_factors(tuple)) product = u_mul(product, factor);
        return product;
    }

private:
    using Key = std::tuple<int, Multiset<int>, Multiset<int>>;

    UElement compute(int i, const Multiset<int>& phi, const Multiset<int>& chi) {
        if (phi.empty() && chi.empty()) return UElement::one();

        if (phi.empty()) {
            // q_i(0, chi) = -(1/|chi|) sum_{0 != psi <= chi} M(psi) (h_i (x) pi(psi)) q_i(0, chi - psi)
            const Rational scale = -(Rational(1) / Rational(Integer(chi.size())));
            UElement sum;
            for (const auto& psi : submultisets(chi)) {
                if (psi.empty()) continue;
                const AlgebraElement coeff = pi(*spec_, psi);
                if (coeff.is_zero()) continue;
                const UElement letter = gen(ChevalleyGenerator::cartan(i), coeff);
                const UElement& rest = q_single(i, Multiset<int>{}, subtract(chi, psi));
                sum += Rational(multinomial(psi)) * u_mul(letter, rest);
            }
            return scale * sum;
        }

        // q_i(phi, chi) = -(1/|phi|) sum_{psi <= chi} sum_{d in supp phi}
        //                 M(psi) (x_{-i} (x) d pi(psi)) q_i(phi - chi_d, chi - psi)
        const Rational scale = -(Rational(1) / Rational(Integer(phi.size())));
        UElement sum;
        for (const auto& psi : submultisets(chi)) {
            const AlgebraElement pi_psi = pi(*spec_, psi);
            if (pi_psi.is_zero()) continue;
            const Multiset<int> chi_rest = subtract(chi, psi);
            const Rational weight{multinomial(psi)};
            for (const auto& [d, mult] : phi.entries()) {
                const AlgebraElement coeff = alg_mul(*spec_, spec_->basis_element(d), pi_psi);
                if (coeff.is_zero()) continue;
                const UElement letter = gen(ChevalleyGenerator::lowering(i), coeff);
                const UElement& rest =
                    q_single(i, subtract(phi, Multiset<int>::characteristic(d)), chi_rest);
                sum += weight * u_mul(letter, rest);
            }
        }
        return scale * sum;
    }

    const AlgebraSpec* spec_;
    std::map<Key, UElement> memo_;
};

inline UElement q_single(int i, const Multiset<int>& phi, const Multiset<int>& chi,
                         const AlgebraSpec& spec) {
    QCache cache(spec);
    return cache.q_single(i, phi, chi);
}

inline UElement q_tuple(const BasisTuple& tuple, const AlgebraSpec& spec) {
    QCache cache(spec);
    return cache.q_tuple(tuple);
}

}  // namespace weyl

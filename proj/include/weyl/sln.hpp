// sl_n in its Chevalley basis {h_i, x_{+/-alpha}} together with the natural
// module V = Q^n. Positive roots are the intervals alpha_i + ... + alpha_j,
// 1 <= i <= j <= n-1; the root vector of +(i,j) is the matrix unit e_{i,j+1}
// and of -(i,j) is e_{j+1,i}. The runtime action on V is weight-index
// arithmetic; dense matrices appear only in validation tests.

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

struct Root {
    int lo = 0;   // 1 <= lo <= hi <= n-1
    int hi = 0;
    int sign = 1;  // +1 or -1

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

enum class GenKind : int { cartan = 0, root = 1 };

struct ChevalleyGenerator {
    GenKind kind = GenKind::cartan;
    int lo = 0;    // cartan: the index i; root: interval start
    int hi = 0;    // root: interval end; cartan: unused (0)
    int sign = 0;  // root: +1/-1; cartan: 0

    static ChevalleyGenerator cartan(int i) { return {GenKind::cartan, i, 0, 0}; }
    static ChevalleyGenerator root_vector(const Root& r) { return {GenKind::root, r.lo, r.hi, r.sign}; }
    static ChevalleyGenerator root_vector(int lo, int hi, int sign) {
        return {GenKind::root, lo, hi, sign};
    }
    // x_{+i} / x_{-i} for the simple root alpha_i
    static ChevalleyGenerator raising(int i) { return root_vector(i, i, +1); }
    static ChevalleyGenerator lowering(int i) { return root_vector(i, i, -1); }

    bool is_cartan() const { return kind == GenKind::cartan; }

    friend bool operator==(const ChevalleyGenerator&, const ChevalleyGenerator&) = default;
    friend auto operator<=>(const ChevalleyGenerator&, const ChevalleyGenerator&) = default;
};

inline void check_generator(const ChevalleyGenerator& z, int n) {
    if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
    const bool ok = z.is_cartan()
                        ? (z.lo >= 1 && z.lo <= n - 1 && z.hi == 0 && z.sign == 0)
                        : (z.lo >= 1 && z.lo <= z.hi && z.hi <= n - 1 && (z.sign == 1 || z.sign == -1));
    if (!ok) throw std::invalid_argument("generator out of range for sl_" + std::to_string(n));
}

inline std::vector<Root> positive_roots(int n) {
    if (n < 2) throw std::invalid_argument("positive_roots: n must be >= 2");
    std::vector<Root> roots;
    roots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) roots.push_back({i, j, +1});
    return roots;
}

// Full Chevalley basis: n-1 Cartan generators plus a root vector per root;
// size n^2 - 1.
inline std::vector<ChevalleyGenerator> chevalley_basis(int n) {
    std::vector<ChevalleyGenerator> basis;
    for (int i = 1; i <= n - 1; ++i) basis.push_back(ChevalleyGenerator::cartan(i));
    for (const Root& r : positive_roots(n)) {
        basis.push_back(ChevalleyGenerator::root_vector(r.lo, r.hi, +1));
        basis.push_back(ChevalleyGenerator::root_vector(r.lo, r.hi, -1));
    }
    return basis;
}

// z . v_k in the natural module: v_k maps to at most one basis vector with
// coefficient +/-1. h_i v_k = (delta_{k,i} - delta_{k,i+1}) v_k; the root
// vector e_{r,c} sends v_c to v_r and kills everything else.
inline std::optional<std::pair<int, int>> act_natural(const ChevalleyGenerator& z, int k, int n) {
    check_generator(z, n);
    if (k < 1 || k > n) throw std::invalid_argument("act_natural: weight index out of range");
    if (z.is_cartan()) {
        if (k == z.lo) return std::make_pair(k, +1);
        if (k == z.lo + 1) return std::make_pair(k, -1);
        return std::nullopt;
    }
    const int row = (z.sign > 0) ? z.lo : z.hi + 1;
    const int col = (z.sign > 0) ? z.hi + 1 : z.lo;
    if (k == col) return std::make_pair(row, +1);
    return std::nullopt;
}

// The realization by matrix units: a generator as a short list of
// (row, col, coefficient) entries of its n x n matrix.
inline std::vector<std::tuple<int, int, int>> matrix_units(const ChevalleyGenerator& z, int n) {
    check_generator(z, n);
    if (z.is_cartan()) return {{z.lo, z.lo, +1}, {z.lo + 1, z.lo + 1, -1}};
    if (z.sign > 0) return {{z.lo, z.hi + 1, +1}};
    return {{z.hi + 1, z.lo, +1}};
}

// Commutator [z, w] = zw - wz re-expressed in the Chevalley basis. A traceless
// diagonal diag(d_1..d_n) decomposes as sum_i (d_1+...+d_i) h_i.
inline std::map<ChevalleyGenerator, Rational> bracket(const ChevalleyGenerator& z,
                                                      const ChevalleyGenerator& w, int n) {
    std::map<std::pair<int, int>, Rational> commutator;  // (row, col) -> coeff
    auto accumulate = [&commutator](int row, int col, const Rational& value) {
        if (value == 0) return;
        auto [it, inserted] = commutator.emplace(std::make_pair(row, col), value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) commutator.erase(it);
        }
    };
    // [e_{ab}, e_{cd}] = delta_{bc} e_{ad} - delta_{da} e_{cb}
    for (const auto& [a, b, x] : matrix_units(z, n))
        for (const auto& [c, d, y] : matrix_units(w, n)) {
            if (b == c) accumulate(a, d, rational(x) * rational(y));
            if (d == a) accumulate(c, b, -(rational(x) * rational(y)));
        }

    std::map<ChevalleyGenerator, Rational> result;
    std::vector<Rational> diagonal(static_cast<std::size_t>(n + 1), Rational(0));
    for (const auto& [rc, value] : commutator) {
        const auto [row, col] = rc;
        if (row == col) {
            diagonal[static_cast<std::size_t>(row)] = value;
        } else if (row < col) {
            result[ChevalleyGenerator::root_vector(row, col - 1, +1)] = value;
        } else {
            result[ChevalleyGenerator::root_vector(col, row - 1, -1)] = value;
        }
    }
    Rational partial(0);
    for (int i = 1; i <= n - 1; ++i) {
        partial += diagonal[static_cast<std::size_t>(i)];
        if (partial != 0) result[ChevalleyGenerator::cartan(i)] = partial;
    }
    return result;
}

// Wire names used by the UElement JSON encoding: ["H", i] and ["X", lo, hi, s].
inline std::string generator_to_text(const ChevalleyGenerator& z) {
    if (z.is_cartan()) return "h" + std::to_string(z.lo);
    std::string name = (z.sign > 0) ? "x+" : "x-";
    name += "(" + std::to_string(z.lo) + "," + std::to_string(z.hi) + ")";
    return name;
}

}  // namespace weyl

// Verification suites for the supporting identities. Each suite exhaustively
// enumerates its parameter cell, records one case per instance with a
// re-runnable counterexample payload on failure, and reports cases in
// canonical enumeration order.
//
// Identities are checked at the module-action level (operators on tensors),
// never as formal-word equality, with one exception: the coproduct
// factorization, which genuinely holds in U^(x)k formally.

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weyl/envelope.hpp"
#include "weyl/json_io.hpp"
#include "weyl/linalg.hpp"
#include "weyl/literal.hpp"
#include "weyl/multiset.hpp"
#include "weyl/qconstruct.hpp"
#include "weyl/symtensor.hpp"
#include "weyl/weylbasis.hpp"

namespace weyl {

struct SuiteCase {
    std::string key;
    bool pass = true;
    json counterexample;  // null unless failed; contains the full inputs
};

struct SuiteReport {
    std::string suite;
    json params;
    std::vector<SuiteCase> cases;
    std::int64_t duration_ms = 0;

    bool passed() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

inline json report_to_json(const SuiteReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases) {
        json entry{{"key", c.key}, {"pass", c.pass}};
        if (!c.pass) entry["counterexample"] = c.counterexample;
        cases.push_back(std::move(entry));
    }
    return json{{"suite", report.suite},
                {"params", report.params},
                {"cases", std::move(cases)},
                {"duration_ms", report.duration_ms}};
}

namespace detail {

// All multisets over basis indices 0..d-1 of exactly the given size, in
// lexicographic order of the multiplicity vector.
inline std::vector<Multiset<int>> multisets_of_size(int d, std::int64_t size) {
    std::vector<Multiset<int>> result;
    Multiset<int> current;
    auto rec = [&](auto&& self, int key, std::int64_t remaining) -> void {
        if (key == d - 1) {
            Multiset<int> complete = current;
            complete.add(key, remaining);
            result.push_back(std::move(complete));
            return;
        }
        for (std::int64_t c = 0; c <= remaining; ++c) {
            Multiset<int> saved = current;
            current.add(key, c);
            self(self, key + 1, remaining - c);
            current = std::move(saved);
        }
    };
    rec(rec, 0, size);
    return result;
}

class Stopwatch {
public:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string case_key(std::initializer_list<std::pair<const char*, std::string>> fields) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : fields) {
        if (!first) out << ";";
        out << name << "=" << value;
        first = false;
    }
    return out.str();
}

}  // namespace detail

// q_i(phi, chi) annihilates v_i (x) 1 whenever |phi| + |chi| > 1.
inline SuiteReport verify_action_zero(const MapAlgebra& ctx, int bound) {
    if (bound < 2) throw std::invalid_argument("verify_action_zero: bound must be >= 2");
    detail::Stopwatch timer;
    SuiteReport report;
    report.suite = "action_zero";
    report.params = json{{"n", ctx.n}, {"algebra", algebra_to_json(ctx.coeff)}, {"bound", bound}};
    QCache cache(ctx.coeff);
    const int d = ctx.coeff.dim();
    for (int i = 1; i <= ctx.n - 1; ++i)
        for (std::int64_t total = 2; total <= bound; ++total)
            for (std::int64_t phi_size = 0; phi_size <= total; ++phi_size)
                for (const auto& phi : detail::multisets_of_size(d, phi_size))
                    for (const auto& chi : detail::multisets_of_size(d, total - phi_size)) {
                        const Tensor image = act(
                            ctx, cache.q_single(i, phi, chi),
                            Tensor::pure({SlotIndex{i, ctx.coeff.unit_index()}}));
                        SuiteCase entry;
                        entry.key = detail::case_key({{"i", std::to_string(i)},
                                                      {"phi", multiset_to_literal(phi, ctx.coeff)},
                                                      {"chi", multiset_to_literal(chi, ctx.coeff)}});
                        entry.pass = image.is_zero();
                        if (!entry.pass)
                            entry.counterexample =
                                json{{"n", ctx.n},
                                     {"algebra", algebra_to_json(ctx.coeff)},
                                     {"i", i},
                                     {"phi", multiset_to_literal(phi, ctx.coeff)},
                                     {"chi", multiset_to_literal(chi, ctx.coeff)},
                                     {"image", tensor_to_json(image)}};
                        report.cases.push_back(std::move(entry));
                    }
    report.duration_ms = timer.elapsed_ms();
    return report;
}

// q_i(phi, chi)(v_i (x) 1)^(x)k = (-1)^k v(0,...,0,chi,phi,0,...,0)
// with chi in slot i and phi in slot i+1, k = |phi| + |chi|.
inline SuiteReport verify_qivi(const MapAlgebra& ctx, int bound) {
    if (bound < 1) throw std::invalid_argument("verify_qivi: bound must be >= 1");
    detail::Stopwatch timer;
    SuiteReport report;
    report.suite = "qivi";
    report.params = json{{"n", ctx.n}, {"algebra", algebra_to_json(ctx.coeff)}, {"bound", bound}};
    QCache cache(ctx.coeff);
    const int d = ctx.coeff.dim();
    for (int i = 1; i <= ctx.n - 1; ++i)
        for (std::int64_t total = 0; total <= bound; ++total)
            for (std::int64_t phi_size = 0; phi_size <= total; ++phi_size)
                for (const auto& phi : detail::multisets_of_size(d, phi_size))
                    for (const auto& chi : detail::multisets_of_size(d, total - phi_size)) {
                        const int k = static_cast<int>(total);
                        const Tensor domain = Tensor::pure(
                            SlotSequence(static_cast<std::size_t>(k),
                                         SlotIndex{i, ctx.coeff.unit_index()}));
                        const Tensor image = act(ctx, cache.q_single(i, phi, chi), domain);
                        BasisTuple tuple;
                        tuple.parts.resize(static_cast<std::size_t>(ctx.n));
                        tuple.parts[static_cast<std::size_t>(i - 1)] = chi;
                        tuple.parts[static_cast<std::size_t>(i)] = phi;
                        const Tensor expected =
                            rational(k % 2 == 0 ? 1 : -1) * v_vector(tuple);
                        SuiteCase entry;
                        entry.key = detail::case_key({{"i", std::to_string(i)},
                                                      {"phi", multiset_to_literal(phi, ctx.coeff)},
                                                      {"chi", multiset_to_literal(chi, ctx.coeff)},
                                                      {"k", std::to_string(k)}});
                        entry.pass = image == expected;
                        if (!entry.pass)
                            entry.counterexample =
                                json{{"n", ctx.n},
                                     {"algebra", algebra_to_json(ctx.coeff)},
                                     {"i", i},
                                     {"phi", multiset_to_literal(phi, ctx.coeff)},
                                     {"chi", multiset_to_literal(chi, ctx.coeff)},
                                     {"k", k},
                                     {"image", tensor_to_json(image)},
                                     {"expected", tensor_to_json(expected)}};
                        report.cases.push_back(std::move(entry));
                    }
    report.duration_ms = timer.elapsed_ms();
    return report;
}

namespace detail {

inline std::string word_to_text(const Word& word, const AlgebraSpec& spec) {
    if (word.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const CurrentGenerator& letter : word) {
        if (!first) out << " ";
        out << generator_to_text(letter.lie) << "[" << spec.label(letter.coeff) << "]";
        first = false;
    }
    return out.str();
}

// All standard basis tensors of rank k over V (x) A.
inline std::vector<SlotSequence> standard_basis_sequences(int n, int d, int k) {
    std::vector<SlotSequence> result;
    SlotSequence current;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == k) {
            result.push_back(current);
            return;
        }
        for (int weight = 1; weight <= n; ++weight)
            for (int coeff = 0; coeff < d; ++coeff) {
                current.push_back(SlotIndex{weight, coeff});
                self(self);
                current.pop_back();
            }
    };
    rec(rec);
    return result;
}

// A small deterministic generator set for the formal factorization check.
inline std::vector<CurrentGenerator> delta_letter_set(const MapAlgebra& ctx) {
    const int second = ctx.coeff.dim() > 1 ? 1 : 0;
    std::vector<CurrentGenerator> letters{
        {ChevalleyGenerator::cartan(1), 0},
        {ChevalleyGenerator::lowering(1), second},
        {ChevalleyGenerator::raising(1), 0},
    };
    if (ctx.n > 2) letters.push_back({ChevalleyGenerator::lowering(ctx.n - 1), 0});
    return letters;
}

}  // namespace detail

// (a) Delta^k = (1^(x)(k-1) (x) Delta^1) o Delta^(k-1), formally, on all words
//     up to the given length over a small generator set, for paper-k <= kmax.
// (b) Delta^(k-1)(q_i(phi, chi)) agrees with the composition sum over
//     comp_k(chi) x comp_k(phi), as operators on every standard basis tensor
//     of rank k, for 2 <= k <= kmax and |phi| + |chi| <= the same bound as
//     the word length.
inline SuiteReport verify_delta(const MapAlgebra& ctx, int kmax, int wordlen) {
    if (kmax < 2) throw std::invalid_argument("verify_delta: kmax must be >= 2");
    detail::Stopwatch timer;
    SuiteReport report;
    report.suite = "delta";
    report.params = json{{"n", ctx.n},
                         {"algebra", algebra_to_json(ctx.coeff)},
                         {"kmax", kmax},
                         {"wordlen", wordlen}};

    const auto letters = detail::delta_letter_set(ctx);
    std::vector<Word> words{Word{}};
    for (int length = 1; length <= wordlen; ++length) {
        std::vector<Word> longer;
        for (const auto& word : words)
            if (static_cast<int>(word.size()) == length - 1)
                for (const auto& letter : letters) {
                    Word extended = word;
                    extended.push_back(letter);
                    longer.push_back(std::move(extended));
                }
        words.insert(words.end(), longer.begin(), longer.end());
    }

    for (const auto& word : words)
        for (int k = 1; k <= kmax; ++k) {
            const UElement u = UElement::single(word);
            const TensorUElement direct = coproduct(u, k + 1);
            const TensorUElement composed = detail::expand_last(coproduct(u, k));
            SuiteCase entry;
            entry.key = detail::case_key(
                {{"word", detail::word_to_text(word, ctx.coeff)}, {"k", std::to_string(k)}});
            entry.pass = direct == composed;
            if (!entry.pass)
                entry.counterexample = json{{"n", ctx.n},
                                            {"algebra", algebra_to_json(ctx.coeff)},
                                            {"word", uelement_to_json(u)},
                                            {"k", k}};
            report.cases.push_back(std::move(entry));
        }

    QCache cache(ctx.coeff);
    const int d = ctx.coeff.dim();
    for (int i = 1; i <= ctx.n - 1; ++i)
        for (int k = 2; k <= kmax; ++k)
            for (std::int64_t total = 0; total <= wordlen; ++total)
                for (std::int64_t phi_size = 0; phi_size <= total; ++phi_size)
                    for (const auto& phi : detail::multisets_of_size(d, phi_size))
                        for (const auto& chi : detail::multisets_of_size(d, total - phi_size)) {
                            const TensorUElement lhs = coproduct(cache.q_single(i, phi, chi), k);
                            TensorUElement rhs(k);
                            for (const auto& chi_parts : compositions(chi, k))
                                for (const auto& phi_parts : compositions(phi, k)) {
                                    std::vector<std::pair<std::vector<Word>, Rational>> partial{
                                        {{}, Rational(1)}};
                                    for (int j = 0; j < k; ++j) {
                                        const UElement& factor = cache.q_single(
                                            i, phi_parts[static_cast<std::size_t>(j)],
                                            chi_parts[static_cast<std::size_t>(j)]);
                                        std::vector<std::pair<std::vector<Word>, Rational>> extended;
                                        for (const auto& [tuple, value] : partial)
                                            for (const auto& [w, c] : factor.terms()) {
                                                auto next = tuple;
                                                next.push_back(w);
                                                extended.emplace_back(std::move(next), value * c);
                                            }
                                        partial = std::move(extended);
                                    }
                                    for (auto& [tuple, value] : partial)
                                        rhs.add_term(std::move(tuple), value);
                                }

                            bool pass = true;
                            json counterexample;
                            for (const auto& slots :
                                 detail::standard_basis_sequences(ctx.n, d, k)) {
                                const Tensor basis_tensor = Tensor::pure(slots);
                                const Tensor left = act(ctx, lhs, basis_tensor);
                                const Tensor right = act(ctx, rhs, basis_tensor);
                                if (left != right) {
                                    pass = false;
                                    counterexample =
                                        json{{"n", ctx.n},
                                             {"algebra", algebra_to_json(ctx.coeff)},
                                             {"i", i},
                                             {"phi", multiset_to_literal(phi, ctx.coeff)},
                                             {"chi", multiset_to_literal(chi, ctx.coeff)},
                                             {"k", k},
                                             {"basis_tensor", tensor_to_json(basis_tensor)},
                                             {"lhs", tensor_to_json(left)},
                                             {"rhs", tensor_to_json(right)}};
                                    break;
                                }
                            }
                            SuiteCase entry;
                            entry.key = detail::case_key(
                                {{"i", std::to_string(i)},
                                 {"phi", multiset_to_literal(phi, ctx.coeff)},
                                 {"chi", multiset_to_literal(chi, ctx.coeff)},
                                 {"k", std::to_string(k)}});
                            entry.pass = pass;
                            entry.counterexample = std::move(counterexample);
                            report.cases.push_back(std::move(entry));
                        }
    report.duration_ms = timer.elapsed_ms();
    return report;
}

struct QonvBasisResult {
    SuiteReport report;
    BasisMatrix basis;
    std::vector<SignRecord> signs;
    std::size_t rank_value = 0;
};

// Aggregates the per-tuple sign analysis, symmetry of images, the
// highest-weight relations and the rank certificate for one (n, A, m).
inline QonvBasisResult verify_qonv_and_basis(const MapAlgebra& ctx, int m,
                                             const Integer& max_dim = Integer(400)) {
    const Integer dimension = sym_dim(ctx.n, ctx.coeff.dim(), m);
    if (dimension > max_dim)
        throw std::invalid_argument("verify_qonv_and_basis: sym_dim " + dimension.get_str() +
                                    " exceeds the guard " + max_dim.get_str() +
                                    " (raise --max-dim to override)");
    detail::Stopwatch timer;
    QonvBasisResult result;
    result.report.suite = "qonv_basis";
    result.report.params = json{{"n", ctx.n},
                                {"m", m},
                                {"algebra", algebra_to_json(ctx.coeff)},
                                {"expected_dim", dimension.get_ui()}};

    result.basis = basis_matrix(ctx, m);

    bool all_paper = true;
    bool all_alt = true;
    for (std::size_t row = 0; row < result.basis.tuples.size(); ++row) {
        const BasisTuple& tuple = result.basis.tuples[row];
        const Tensor& image = result.basis.images[row];
        SuiteCase entry;
        entry.key = detail::case_key({{"tuple", tuple_to_literal(tuple, ctx.coeff)}});
        const Tensor expected = v_vector(tuple);
        int observed = 0;
        if (image == expected)
            observed = +1;
        else if (image == rational(-1) * expected)
            observed = -1;
        const bool symmetric = is_symmetric(image);
        entry.pass = observed != 0 && symmetric;
        if (entry.pass) {
            SignRecord record{tuple, observed, false, false};
            record.paper_exponent_match =
                (displayed_sign_exponent(tuple) % 2 == 0 ? 1 : -1) == observed;
            record.alt_exponent_match =
                (step_count_sign_exponent(tuple) % 2 == 0 ? 1 : -1) == observed;
            all_paper = all_paper && record.paper_exponent_match;
            all_alt = all_alt && record.alt_exponent_match;
            result.signs.push_back(std::move(record));
        } else {
            entry.counterexample = json{{"n", ctx.n},
                                        {"m", m},
                                        {"algebra", algebra_to_json(ctx.coeff)},
                                        {"tuple", tuple_to_literal(tuple, ctx.coeff)},
                                        {"image", tensor_to_json(image)},
                                        {"v_vector", tensor_to_json(expected)},
                                        {"symmetric", symmetric}};
        }
        result.report.cases.push_back(std::move(entry));
    }

    {
        SuiteCase entry;
        entry.key = "sign_formula";
        entry.pass = all_paper || all_alt;
        if (!entry.pass)
            entry.counterexample = json{{"n", ctx.n},
                                        {"m", m},
                                        {"algebra", algebra_to_json(ctx.coeff)},
                                        {"detail", "neither exponent formula matches every tuple"}};
        result.report.cases.push_back(std::move(entry));
    }

    {
        const HighestWeightCheck check = highest_weight_check(ctx, m);
        SuiteCase entry;
        entry.key = "highest_weight";
        entry.pass = check.passed;
        if (!check.passed)
            entry.counterexample = json{{"n", ctx.n},
                                        {"m", m},
                                        {"algebra", algebra_to_json(ctx.coeff)},
                                        {"detail", check.counterexample}};
        result.report.cases.push_back(std::move(entry));
    }

    {
        result.rank_value = rank(result.basis.matrix);
        SuiteCase entry;
        entry.key = "rank";
        entry.pass = Integer(static_cast<unsigned long>(result.rank_value)) == dimension;
        if (!entry.pass)
            entry.counterexample = json{{"n", ctx.n},
                                        {"m", m},
                                        {"algebra", algebra_to_json(ctx.coeff)},
                                        {"rank", result.rank_value},
                                        {"expected", dimension.get_ui()}};
        result.report.cases.push_back(std::move(entry));
    }

    result.report.duration_ms = timer.elapsed_ms();
    return result;
}

}  // namespace weyl

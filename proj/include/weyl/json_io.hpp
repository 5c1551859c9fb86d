// JSON wire formats.
//
//   generator          ["H", i]  or  ["X", lo, hi, sign]
//   UElement           {"terms":[{"coeff":"p/q","word":[[GEN,basis_index],...]},...]}
//   Tensor             {"rank":m, "terms":[{"coeff":"p/q","slots":[[weight,basis_index],...]},...]}
//   algebra document   {"basis":[...], "unit_index":i, "mul":[[[[k,"p/q"],...],...],...]}
//   rank certificate   {"n","m","algebra","tuples","rank","expected","signs":[...]}
//
// Term lists are sorted by the natural orders of the underlying maps, so
// identical values serialize byte-identically.

#pragma once

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/envelope.hpp"
#include "weyl/literal.hpp"
#include "weyl/rational.hpp"
#include "weyl/sln.hpp"
#include "weyl/symtensor.hpp"
#include "weyl/weylbasis.hpp"

namespace weyl {

using json = nlohmann::ordered_json;

inline json generator_to_json(const ChevalleyGenerator& z) {
    if (z.is_cartan()) return json::array({"H", z.lo});
    return json::array({"X", z.lo, z.hi, z.sign});
}

inline ChevalleyGenerator generator_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_string())
        throw std::invalid_argument("generator: expected [\"H\",i] or [\"X\",lo,hi,sign]");
    const std::string tag = j[0].get<std::string>();
    if (tag == "H") {
        if (j.size() != 2) throw std::invalid_argument("generator: H takes one index");
        return ChevalleyGenerator::cartan(j[1].get<int>());
    }
    if (tag == "X") {
        if (j.size() != 4) throw std::invalid_argument("generator: X takes lo, hi, sign");
        const int sign = j[3].get<int>();
        if (sign != 1 && sign != -1) throw std::invalid_argument("generator: sign must be +/-1");
        return ChevalleyGenerator::root_vector(j[1].get<int>(), j[2].get<int>(), sign);
    }
    throw std::invalid_argument("generator: unknown tag '" + tag + "'");
}

inline json uelement_to_json(const UElement& u) {
    json terms = json::array();
    for (const auto& [word, value] : u.terms()) {
        json letters = json::array();
        for (const CurrentGenerator& letter : word)
            letters.push_back(json::array({generator_to_json(letter.lie), letter.coeff}));
        terms.push_back(json{{"coeff", to_string(value)}, {"word", std::move(letters)}});
    }
    return json{{"terms", std::move(terms)}};
}

inline UElement uelement_from_json(const json& j) {
    UElement u;
    for (const auto& term : j.at("terms")) {
        Word word;
        for (const auto& letter : term.at("word")) {
            if (!letter.is_array() || letter.size() != 2)
                throw std::invalid_argument("UElement: each letter is [generator, basis_index]");
            word.push_back(CurrentGenerator{generator_from_json(letter[0]), letter[1].get<int>()});
        }
        u.add_term(std::move(word), parse_rational(term.at("coeff").get<std::string>()));
    }
    return u;
}

inline json tensor_to_json(const Tensor& t) {
    json terms = json::array();
    for (const auto& [slots, value] : t.terms()) {
        json sequence = json::array();
        for (const SlotIndex& slot : slots) sequence.push_back(json::array({slot.weight, slot.coeff}));
        terms.push_back(json{{"coeff", to_string(value)}, {"slots", std::move(sequence)}});
    }
    return json{{"rank", t.rank()}, {"terms", std::move(terms)}};
}

inline Tensor tensor_from_json(const json& j) {
    Tensor t(j.at("rank").get<int>());
    for (const auto& term : j.at("terms")) {
        SlotSequence slots;
        for (const auto& slot : term.at("slots")) {
            if (!slot.is_array() || slot.size() != 2)
                throw std::invalid_argument("Tensor: each slot is [weight, basis_index]");
            slots.push_back(SlotIndex{slot[0].get<int>(), slot[1].get<int>()});
        }
        t.add_term(std::move(slots), parse_rational(term.at("coeff").get<std::string>()));
    }
    return t;
}

inline json algebra_to_json(const AlgebraSpec& spec) {
    json mul = json::array();
    for (int i = 0; i < spec.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < spec.dim(); ++j) {
            json entry = json::array();
            for (const auto& [index, value] : spec.basis_product(i, j).coords)
                entry.push_back(json::array({index, to_string(value)}));
            row.push_back(std::move(entry));
        }
        mul.push_back(std::move(row));
    }
    return json{{"basis", spec.basis_labels()}, {"unit_index", spec.unit_index()}, {"mul", std::move(mul)}};
}

// Parses and fully validates an algebra document. Throws algebra_error with a
// distinct kind for schema violations, non-commutativity, non-associativity
// and a broken unit law.
inline AlgebraSpec load_algebra(const json& document) {
    if (!document.is_object() || !document.contains("basis") || !document.contains("unit_index") ||
        !document.contains("mul"))
        throw algebra_error(algebra_error::kind::schema,
                            "algebra document needs 'basis', 'unit_index' and 'mul'");
    std::vector<std::string> labels;
    try {
        labels = document.at("basis").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
        throw algebra_error(algebra_error::kind::schema, "'basis' must be an array of strings");
    }
    if (!document.at("unit_index").is_number_integer())
        throw algebra_error(algebra_error::kind::schema, "'unit_index' must be an integer");
    const int unit = document.at("unit_index").get<int>();

    const auto& mul = document.at("mul");
    if (!mul.is_array())
        throw algebra_error(algebra_error::kind::schema, "'mul' must be an array of rows");
    std::vector<std::vector<AlgebraElement>> structure;
    for (const auto& row : mul) {
        if (!row.is_array())
            throw algebra_error(algebra_error::kind::schema, "'mul' rows must be arrays");
        std::vector<AlgebraElement> entries;
        for (const auto& entry : row) {
            if (!entry.is_array())
                throw algebra_error(algebra_error::kind::schema, "'mul' entries must be arrays");
            AlgebraElement element;
            for (const auto& coordinate : entry) {
                if (!coordinate.is_array() || coordinate.size() != 2 ||
                    !coordinate[0].is_number_integer() || !coordinate[1].is_string())
                    throw algebra_error(algebra_error::kind::schema,
                                        "structure coordinates are [index, \"p/q\"] pairs");
                try {
                    element.add_term(coordinate[0].get<int>(),
                                     parse_rational(coordinate[1].get<std::string>()));
                } catch (const std::invalid_argument& error) {
                    throw algebra_error(algebra_error::kind::schema, error.what());
                }
            }
            entries.push_back(std::move(element));
        }
        structure.push_back(std::move(entries));
    }

    AlgebraSpec spec(std::move(labels), unit, std::move(structure));
    spec.validate();
    return spec;
}

inline AlgebraSpec load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra file '" + path + "'");
    json document;
    try {
        in >> document;
    } catch (const nlohmann::json::exception& error) {
        throw algebra_error(algebra_error::kind::schema,
                            "algebra file '" + path + "' is not valid JSON: " + error.what());
    }
    return load_algebra(document);
}

// "trunc:N" or "file:PATH"
inline AlgebraSpec algebra_from_literal(const std::string& literal) {
    if (literal.rfind("trunc:", 0) == 0) {
        const std::string tail = literal.substr(6);
        std::size_t used = 0;
        int N = 0;
        try {
            N = std::stoi(tail, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad algebra literal '" + literal + "'");
        }
        if (used != tail.size() || N < 1)
            throw std::invalid_argument("bad algebra literal '" + literal + "'");
        return trunc_poly(N);
    }
    if (literal.rfind("file:", 0) == 0) return load_algebra_file(literal.substr(5));
    throw std::invalid_argument("algebra literal must be trunc:N or file:PATH, got '" + literal + "'");
}

inline json sign_record_to_json(const SignRecord& record, const AlgebraSpec& spec) {
    return json{{"tuple", tuple_to_literal(record.tuple, spec)},
                {"observed", record.observed},
                {"paper_exponent_match", record.paper_exponent_match},
                {"alt_exponent_match", record.alt_exponent_match}};
}

inline json rank_certificate_json(const MapAlgebra& ctx, int m, const std::string& algebra_literal,
                                  const BasisMatrix& basis, std::size_t computed_rank,
                                  const std::vector<SignRecord>& signs) {
    json tuples = json::array();
    for (const auto& tuple : basis.tuples) tuples.push_back(tuple_to_literal(tuple, ctx.coeff));
    json sign_list = json::array();
    for (const auto& record : signs) sign_list.push_back(sign_record_to_json(record, ctx.coeff));
    const Integer expected = sym_dim(ctx.n, ctx.coeff.dim(), m);
    if (!expected.fits_ulong_p())
        throw std::logic_error("rank certificate: expected dimension does not fit a machine word");
    return json{{"n", ctx.n},
                {"m", m},
                {"algebra", algebra_literal},
                {"tuples", std::move(tuples)},
                {"rank", computed_rank},
                {"expected", expected.get_ui()},
                {"signs", std::move(sign_list)}};
}

}  // namespace weyl

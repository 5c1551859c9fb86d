// Text forms used on the command line and in report keys:
//   multiset  "label:mult,label:mult" with "-" for the empty multiset
//   tuple     multiset literals joined by ";" (one part per weight index)
//   algebra   "trunc:N" or "file:PATH" (file loading lives in json_io.hpp)
// Formatting and parsing round-trip exactly.

#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/algebra.hpp"
#include "weyl/multiset.hpp"
#include "weyl/symtensor.hpp"

namespace weyl {

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char separator) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(separator, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

inline std::string multiset_to_literal(const Multiset<int>& multiset, const AlgebraSpec& spec) {
    if (multiset.empty()) return "-";
    std::ostringstream out;
    bool first = true;
    for (const auto& [index, mult] : multiset.entries()) {
        if (!first) out << ",";
        out << spec.label(index) << ":" << mult;
        first = false;
    }
    return out.str();
}

inline Multiset<int> parse_multiset_literal(std::string_view text, const AlgebraSpec& spec) {
    Multiset<int> result;
    if (text == "-") return result;
    if (text.empty()) throw std::invalid_argument("empty multiset literal (use '-' for the empty multiset)");
    for (const auto part : detail::split(text, ',')) {
        const auto colon = part.rfind(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 == part.size())
            throw std::invalid_argument("bad multiset entry '" + std::string(part) +
                                        "' (expected label:multiplicity)");
        const std::string label(part.substr(0, colon));
        const std::string count_text(part.substr(colon + 1));
        std::int64_t count = 0;
        try {
            std::size_t used = 0;
            count = std::stoll(count_text, &used);
            if (used != count_text.size()) throw std::invalid_argument(count_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad multiplicity '" + count_text + "' in multiset literal");
        }
        if (count < 1)
            throw std::invalid_argument("multiplicity must be positive in '" + std::string(part) + "'");
        result.add(spec.index_of(label), count);
    }
    return result;
}

inline std::string tuple_to_literal(const BasisTuple& tuple, const AlgebraSpec& spec) {
    std::ostringstream out;
    for (int i = 0; i < tuple.n(); ++i) {
        if (i) out << ";";
        out << multiset_to_literal(tuple.parts[static_cast<std::size_t>(i)], spec);
    }
    return out.str();
}

inline BasisTuple parse_tuple_literal(std::string_view text, const AlgebraSpec& spec, int n) {
    const auto parts = detail::split(text, ';');
    if (static_cast<int>(parts.size()) != n)
        throw std::invalid_argument("tuple literal has " + std::to_string(parts.size()) +
                                    " parts, expected " + std::to_string(n));
    BasisTuple tuple;
    tuple.parts.reserve(parts.size());
    for (const auto part : parts) tuple.parts.push_back(parse_multiset_literal(part, spec));
    return tuple;
}

}  // namespace weyl

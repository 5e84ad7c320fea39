#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcolor/matrix.hpp"

namespace knotcolor {

// Machine-readable result record emitted by the CLI. Determinants are carried
// as decimal strings so arbitrary-precision values survive the round trip.
struct Report {
    std::string input;
    std::string kind;  // "pd" or "pretzel"
    std::optional<std::string> determinant;
    std::optional<std::string> determinant_coloring;
    std::optional<std::string> determinant_goeritz;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> nullities;  // (p, nullity)
    std::optional<std::uint64_t> coloring_modulus;
    std::optional<std::string> coloring_total;
    std::optional<std::string> coloring_nontrivial;
    std::vector<std::string> coloring_group;  // nonunit Smith divisors
    std::vector<std::pair<std::string, IntMatrix>> matrices;
    std::vector<std::vector<std::uint64_t>> coloring_list;

    std::string to_json() const;
    static Report from_json(const std::string& text);
    std::string to_text() const;

    bool operator==(const Report& o) const;
};

}  // namespace knotcolor

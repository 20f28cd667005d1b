#pragma once

// Text format for model domains:
//
//     vars z1 z2;
//     h1 = z1^2;
//     h2 = 3*z1*z2 - z2^3;
//     config {
//         max_level = 5;
//         seed = 7;
//     }
//
// Variables are declared first; the boundary functions are numbered
// consecutively from h1; an optional config block pins run settings.
// Expressions support + - * ^ with integer and rational literals and
// parentheses.  The canonical printer emits exactly this shape, and
// parsing what it prints reproduces the original file.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specdom/kohn.hpp"
#include "specdom/polynomial.hpp"

namespace specdom {

/// Syntax or validation failure with 1-based source coordinates.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

/// Settings a domain file may pin in its config block.  Unset fields fall
/// back to environment variables and built-in defaults; command-line flags
/// override everything.
struct DomainConfig {
    std::optional<int> max_level;
    std::optional<int> m_max;
    std::optional<int> generator_cap;
    std::optional<int> random_combos;
    std::optional<std::uint64_t> seed;
    std::optional<int> p_cap;
    std::optional<int> exponent_cap;
    std::optional<int> samples;
    std::optional<int> degree_cap;
    bool operator==(const DomainConfig&) const = default;
};

struct DomainFile {
    std::vector<std::string> variables;
    std::vector<Polynomial> h;  // over |variables| variables, graded order
    DomainConfig config;
    bool operator==(const DomainFile&) const = default;
};

/// Parses the format above.  Throws parse_error with the offending
/// position on any syntax violation, undeclared or duplicate variable,
/// misnumbered h, boundary function with a nonzero value at the origin,
/// or unknown/duplicate/out-of-range config key.
DomainFile parse_domain(const std::string& text);

/// Parses one expression over the given variables; the --poly surface and
/// the certificate reader reuse the domain-file expression grammar.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

/// Canonical rendering; parse_domain(print_domain(f)) == f.
std::string print_domain(const DomainFile& f);

/// Engine-facing view.  Throws std::invalid_argument when the file
/// declares no boundary functions.
SpecialDomain to_special_domain(const DomainFile& f);

}  // namespace specdom

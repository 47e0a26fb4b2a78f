#pragma once

#include <string>
#include <vector>

#include "bezlin/multipoly.hpp"

namespace bezlin {

/// Parses the polynomial grammar used by the CLI and fixtures:
/// integer (or num/den) literals, declared variable names, `+ - * ^` and
/// parentheses; multiplication is always explicit.
MultiPoly parse_poly(const std::string& text,
                     const std::vector<std::string>& vars,
                     DomainDescriptor dom);

/// Canonical rendering in graded-lex term order, highest degree first.
/// parse_poly(print_poly(f)) == f.
std::string print_poly(const MultiPoly& f,
                       const std::vector<std::string>& vars);

} // namespace bezlin

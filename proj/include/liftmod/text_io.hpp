#pragma once

// Plain-text formats.
//
// Representation:
//   p 2
//   n 4
//   gens 2 s t
//   rel s s
//   rel s t s^-1 t^-1
//   mat s
//   <n rows of n integers in [0, p)>
//   mat t
//   ...
// Multiplication table: `order N` then N rows of N element indices (identity 0).
// Group algebra element: `elt` then |G| integer coefficients.
// `#` starts a comment anywhere on a line.

#include <string>
#include <string_view>
#include <vector>

#include "liftmod/groups.hpp"
#include "liftmod/obstruction.hpp"
#include "liftmod/replift.hpp"

namespace liftmod {

/// Errors carry Errc::Parse and a "line N: " prefix.
Representation parse_representation(std::string_view text);
std::string format_representation(const Representation& rep);

FiniteGroup parse_table(std::string_view text);
std::string format_table(const FiniteGroup& g);

/// Coefficients are reduced into [0, p).
GroupAlgebraElement parse_algebra_element(std::string_view text, const FiniteGroup& g, const PrimeCtx& ctx);
std::string format_algebra_element(const GroupAlgebraElement& e);

/// `C n`, `Q n`, `D n`, `CxC a b`, `C3xC3`, `C3semi n` (n = 2^k the order of
/// the cyclic 2-part).
FamilySpec parse_family_spec(const std::vector<std::string>& tokens);

std::string read_file(const std::string& path);

}  // namespace liftmod

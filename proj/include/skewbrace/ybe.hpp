#pragma once

#include <array>
#include <optional>

#include "brace.hpp"

namespace skewbrace {

struct YBESolution {
    int n = 0;
    Table first;   // (a,b) -> first component of r
    Table second;  // (a,b) -> second component of r
    bool braid = false;
    bool nondegenerate_left = false;
    bool nondegenerate_right = false;
};

struct BraidVerdict {
    bool holds = false;
    std::optional<std::array<int, 3>> witness;  // lowest failing triple
};

// r(a,b) = (lambda_a(b), lambda_a(b)^-1 a b); braid and non-degeneracy
// are verified exhaustively, never assumed
YBESolution solution_from_brace(const Brace& B);

BraidVerdict check_braid(const YBESolution& sol);

}  // namespace skewbrace

#pragma once

#include <vector>

#include "wfree/rational.hpp"

namespace wfree {

bool is_balanced(const std::vector<int>& I);

Rational r1_sym(const std::vector<int>& I);
// Accepts any order; the value is alternating in the entries.
Rational rn_sym_recursive(int n, const std::vector<int>& I);
Rational rn_sym_closed(int n, const std::vector<int>& I);

Rational r1_orth(const std::vector<int>& I, const std::vector<int>& J);
Rational rn_orth_recursive(int n, const std::vector<int>& I, const std::vector<int>& J);

// lim_{x -> infinity} R_n(I, x, x+1) for an interleaved front I of length 2n.
Rational limit_remainder(int n, const std::vector<int>& I);

}  // namespace wfree

#pragma once

#include "holreg/multipoly.hpp"

namespace holreg {

/// Monic under graded lex: leading coefficient scaled to 1. Zero stays zero.
MultiPoly poly_normalize(const MultiPoly& p);

/// GCD over Q(i)[x_0..x_{n-1}] via contents and a primitive pseudo-remainder
/// sequence. Result is monic under graded lex; gcd(0, 0) = 0.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Monic LCM; zero when either argument is zero.
MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b);

}  // namespace holreg

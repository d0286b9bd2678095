#pragma once

#include <vector>

#include "alexpoly/bivar.hpp"

namespace alexpoly {

// Determinant of a square matrix of polynomials by fraction-free (Bareiss)
// elimination with row pivoting. All divisions are exact.
bivar_poly bareiss_determinant(std::vector<std::vector<bivar_poly>> m);

// Resultant of two polynomials in an eliminated variable, given as
// coefficient vectors a[0..n], b[0..m] (a[k] = coefficient of the k-th power;
// trailing zero coefficients are stripped). Res of two constants is 1.
bivar_poly sylvester_resultant(std::vector<bivar_poly> a, std::vector<bivar_poly> b);

// True iff f has no repeated factor. Uses Res_x(f, df/dx) when f involves x,
// Res_y(f, df/dy) otherwise; f must be nonzero and nonconstant.
bool is_squarefree(const bivar_poly& f);

} // namespace alexpoly

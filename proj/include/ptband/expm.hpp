#pragma once

#include "ptband/types.hpp"

namespace ptband {

/// Dense matrix exponential by scaling-and-squaring with diagonal Pade
/// approximants of degree 3/5/7/9/13 (Higham's 2005 parameters). Backward
/// error of the approximant is below unit roundoff for every input norm.
Matrix matrix_exponential(const Matrix& a);

} // namespace ptband

#pragma once

#include "ghl/linalg.hpp"
#include "ghl/numeric.hpp"

#include <stdexcept>

namespace ghl {

struct FrameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Orthonormal frame for G with J w_{2k} = w_{2k+1}. Columns of the result
// are the frame vectors in the input coordinates. Greedy: take the input
// basis vectors in order, orthonormalize against the span so far, append w
// and Jw; vectors already in the span are skipped.
Mat<Numeric> gram_schmidt_unitary(const Mat<Numeric>& G, const Mat<Numeric>& J);

// Leading principal minors all above tol.
bool is_positive_definite(const Mat<Numeric>& G, double tol);

} // namespace ghl

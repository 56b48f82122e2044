#ifndef PASCALDET_DETENGINE_HPP
#define PASCALDET_DETENGINE_HPP

#include "pascaldet/matrix.hpp"

namespace pascaldet {

// Laplace expansion along the first row. Brute-force oracle; the dimension
// guard keeps the factorial cost honest.
MPoly det_cofactor(const PolyMatrix& m);

// Fraction-free Bareiss elimination; every division is exact by the Bareiss
// identity. Zero pivots are handled by a signed row swap; if no nonzero
// pivot exists below, the determinant is zero. This is the production engine.
MPoly det_bareiss(const PolyMatrix& m);

// Dodgson condensation. Whenever an interior minor needed as a divisor is
// the zero polynomial, that subdeterminant is recomputed with det_bareiss
// and condensation resumes above it.
MPoly det_condensation(const PolyMatrix& m);

} // namespace pascaldet

#endif

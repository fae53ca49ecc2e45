#pragma once
// Certified evaluation of cyclotomic representatives at the embedding
// z -> exp(2 pi i / q). Signs are decided with MPFR interval arithmetic at
// escalating precision, so a returned sign is a proof, not an estimate.
// Elements must be real at the embedding (imaginary enclosure is checked).

#include "maglat/polynomial.hpp"

namespace maglat {

/// Real part of p(e^{2 pi i/q}) in double precision (imaginary part must be
/// numerically negligible; throws otherwise). `var` is the z variable; every
/// other variable must be absent.
double cyclotomic_embedding(const Polynomial& zrep, unsigned q, unsigned var);

/// Certified sign (-1, 0, +1) of the real number p(e^{2 pi i/q}).
/// Zero is decided exactly (zero canonical representative); otherwise the
/// interval is refined up to `max_bits` of precision and std::runtime_error
/// is thrown if the sign still cannot be separated from zero.
int cyclotomic_sign(const Polynomial& zrep, unsigned q, unsigned var,
                    unsigned max_bits = 4096);

}  // namespace maglat

#pragma once

#include "hbp/rational.hpp"

namespace hbp {

// The pair (t, r) defining the hereditary size bound e(H) <= t|V(H)| + r.
// Admissibility: t > 0 and r >= -C(floor(t)+1, 2).
struct Params {
    Rational t;
    Rational r;

    Params(Rational t_, Rational r_) : t(t_), r(r_) {
        if (!(t > Rational(0))) throw ValidationError("t must be positive");
        if (r < -binomial2(t.floor() + 1))
            throw ValidationError("r below -C(floor(t)+1,2), inadmissible");
    }
};

// Constants derived from (t, r) that govern the extremal star forests.
//   t0   = floor(t)+1-t, in (0,1]
//   g0   = t*floor(t) + r - C(floor(t),2), >= 0 for admissible r
//   s    = ceil((t(floor(t)+1)+r) / t0) + 1
//   m0   = floor(1/t0)
//   phi0 = (1+m0)*t0 - 1, in (0, t0]
//   g0   = alpha0*phi0 + beta0 with alpha0 >= 0 integral, 0 <= beta0 < phi0
struct DerivedConstants {
    long floor_t;
    long s;
    Rational t0;
    Rational g0;
    long m0;
    Rational phi0;
    long alpha0;
    Rational beta0;
};

// Requires t >= 1; connected graphs with the property force that anyway.
DerivedConstants derive_constants(const Params& p);

}  // namespace hbp

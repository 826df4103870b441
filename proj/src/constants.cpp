#include "hbp/constants.hpp"

namespace hbp {

DerivedConstants derive_constants(const Params& p) {
    if (p.t < Rational(1))
        throw ValidationError("derived constants need t >= 1 (t < 1 admits no large connected graph)");
    DerivedConstants d;
    d.floor_t = p.t.floor();
    d.t0 = Rational(d.floor_t + 1) - p.t;
    d.g0 = p.t * Rational(d.floor_t) + p.r - binomial2(d.floor_t);
    d.s = ((p.t * Rational(d.floor_t + 1) + p.r) / d.t0).ceil() + 1;
    d.m0 = (Rational(1) / d.t0).floor();
    d.phi0 = Rational(1 + d.m0) * d.t0 - Rational(1);
    d.alpha0 = (d.g0 / d.phi0).floor();
    d.beta0 = d.g0 - Rational(d.alpha0) * d.phi0;
    return d;
}

}  // namespace hbp

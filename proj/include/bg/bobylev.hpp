#pragma once

#include "bg/grid.hpp"
#include "bg/kernel.hpp"
#include "bg/sphere.hpp"

namespace bg {

struct BobylevOptions {
    // spectral refinement factor for the interpolation grid (0 = auto)
    int upsample = 0;
    // tricubic (3) or trilinear (1) interpolation of fhat at k+-
    int interp_order = 3;
    double boundary_tol = 1e-9;
    // modes whose envelope bound falls below cutoff * max|fhat| are zeroed
    double mode_cutoff = 1e-13;
};

// Maxwellian-molecules gain term through the Fourier-side representation:
// per mode, Qhat(k) = int fhat(k+) fhat(k-) b(khat.omega) domega, evaluated
// with fhat interpolated on a spectrally refined mode grid, then transformed
// back. Approximates the physical gain term at lambda = 0.
GridFunction q0_plus_bobylev(const GridFunction& f, const AngularKernel& kern,
                             const SphereRule& rule, const BobylevOptions& opt = {});

}  // namespace bg

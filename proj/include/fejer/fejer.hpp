#pragma once

// Discrete Fourier analysis on the cyclic group Z/NZ: triangular smoothing
// kernel, closed-form norms and Fourier multiplier, circular convolution,
// and smoothed-discrepancy bounds for subsets.

#include "fejer/signal.hpp"
#include "fejer/transform.hpp"
#include "fejer/kernel.hpp"
#include "fejer/discrepancy.hpp"
#include "fejer/rng.hpp"
#include "fejer/experiment.hpp"
#include "fejer/report.hpp"

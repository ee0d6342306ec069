#pragma once

// Umbrella header: exact divisor-class calculus on the moduli spaces of
// curves, with and without a marked point.
//
//   rational.hpp          exact arbitrary-precision rationals
//   genus_polynomial.hpp  univariate polynomials in the genus symbol
//   classes.hpp           divisor classes, partial classes, slope
//   pushpull.hpp          pushforward/pullback along the forgetful map
//   curves.hpp            test-curve pairing vectors
//   catalog.hpp           named classes and closed-form coefficients
//   theorems.hpp          inequality checks, bounds, and tables
//   json_io.hpp           JSON (de)serialization
//   verification.hpp      the numbered verification suite

#include "mslope/catalog.hpp"
#include "mslope/classes.hpp"
#include "mslope/curves.hpp"
#include "mslope/errors.hpp"
#include "mslope/genus_polynomial.hpp"
#include "mslope/json_io.hpp"
#include "mslope/pushpull.hpp"
#include "mslope/rational.hpp"
#include "mslope/theorems.hpp"
#include "mslope/verification.hpp"

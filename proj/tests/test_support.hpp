// Shared helpers for the unit tests: a fixed-seed RNG and small generators
// for random rationals and divisor classes, used by the property-style tests.
// The seed is fixed so failures reproduce deterministically.
#pragma once

#include <mslope/mslope.hpp>

#include <random>

namespace testsupport {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(0x5eed5eed5eedULL);
    return engine;
}

inline mslope::Rational random_rational()
{
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 12);
    return mslope::Rational(num(rng()), den(rng()));
}

inline mslope::Rational random_nonzero_rational()
{
    for (;;) {
        mslope::Rational r = random_rational();
        if (!r.is_zero()) return r;
    }
}

inline mslope::DivisorClass random_unpointed(long genus)
{
    mslope::DivisorClass d(genus);
    d.lambda = random_rational();
    for (std::size_t i = 0; i < d.delta.size(); ++i) d.delta[i] = random_rational();
    return d;
}

inline mslope::PointedDivisorClass random_pointed(long genus)
{
    mslope::PointedDivisorClass d(genus);
    d.lambda = random_rational();
    d.psi = random_rational();
    for (std::size_t i = 0; i < d.delta.size(); ++i) d.delta[i] = random_rational();
    return d;
}

} // namespace testsupport

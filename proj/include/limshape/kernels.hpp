#pragma once
// Counting kernels. The *_reference versions are plain enumerations kept as
// test oracles; the others are the ones the library uses.
#include "limshape/monomial.hpp"

#include <cstdint>
#include <vector>

namespace limshape::kernels {

// Enumerates every degree-d monomial and tests membership.
std::int64_t hf_reference(const MonomialIdeal& I, std::int64_t d);

// Fixes all but the last two exponents and counts the uncovered part of the
// remaining segment as the complement of a union of intervals.
std::int64_t hf_serial(const MonomialIdeal& I, std::int64_t d);

// Same count, OpenMP over the first exponent (>= 3 variables).
std::int64_t hf_parallel(const MonomialIdeal& I, std::int64_t d);

// HF(0..dmax), OpenMP over degrees.
std::vector<std::int64_t> hf_range(const MonomialIdeal& I, std::int64_t dmax);
std::vector<std::int64_t> hf_range_serial(const MonomialIdeal& I, std::int64_t dmax);

}  // namespace limshape::kernels

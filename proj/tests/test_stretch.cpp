// Slow stretch check: the truncated tangent computation reproduces
// dim H^2(T_X) = 1 for the quintic threefold.  The dimension overshoots at
// small bounds (peak 541 at B=4) before collapsing to the limit, so this
// needs B=12 and roughly two minutes of exact arithmetic.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picard/tangent.hpp"
#include "test_support.hpp"

using namespace picard;

TEST_CASE("quintic threefold: truncated H^2(T_X) stabilizes at dimension 1") {
  HomogeneousPoly F = testsupport::fermat(4, 5);
  TruncationOptions opts;
  opts.max_basis = 10'000'000;
  TruncatedDim r = truncated_h_tangent(F, 2, 12, opts);
  CHECK(r.dim == 1);
  CHECK(r.stabilized);
}

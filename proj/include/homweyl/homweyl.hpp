#pragma once

// Umbrella header for the homweyl library: exact arithmetic in the first
// Weyl algebra A_1 and its hom-associative deformations A_1^k, morphism and
// derivation machinery, truncated formal deformations, verification suites,
// and the expression front end.

#include "homweyl/expr.hpp"
#include "homweyl/morphism.hpp"
#include "homweyl/scalar.hpp"
#include "homweyl/series.hpp"
#include "homweyl/verify.hpp"
#include "homweyl/weyl.hpp"

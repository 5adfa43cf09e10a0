#pragma once

// Single include for the whole library: special functions, prime-power
// measures, quadrature, the Levy densities and their Thorin kernels, the
// exponent assembly, the zeros table with its Hadamard product, the GGC
// sampler, the verification harness, and the coverage ledger.

#include "xiggc/types.hpp"
#include "xiggc/quadrature.hpp"
#include "xiggc/specfun.hpp"
#include "xiggc/numtheory.hpp"
#include "xiggc/nucore.hpp"
#include "xiggc/levy.hpp"
#include "xiggc/zeros.hpp"
#include "xiggc/sampler.hpp"
#include "xiggc/harness.hpp"
#include "xiggc/docsmap.hpp"

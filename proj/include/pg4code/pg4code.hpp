#pragma once

// Optimal mixed-dimension subspace codes in PG(4,q): construction for every
// prime power 2 <= q <= 16, orbit machinery, and independent verification.

#include "audit.hpp"
#include "codefile.hpp"
#include "construct_even.hpp"
#include "construct_odd.hpp"
#include "gf.hpp"
#include "group.hpp"
#include "subspace.hpp"
#include "verify.hpp"

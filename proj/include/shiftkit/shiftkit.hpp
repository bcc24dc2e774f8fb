#pragma once

// Umbrella header: exact-arithmetic analysis of unilateral weighted shifts.

#include "shiftkit/berger.hpp"
#include "shiftkit/bisect.hpp"
#include "shiftkit/extension.hpp"
#include "shiftkit/hankel.hpp"
#include "shiftkit/interval.hpp"
#include "shiftkit/matrix.hpp"
#include "shiftkit/perturb.hpp"
#include "shiftkit/polynomial.hpp"
#include "shiftkit/quad.hpp"
#include "shiftkit/rational.hpp"
#include "shiftkit/shifts.hpp"

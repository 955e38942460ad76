#pragma once

// Umbrella header for the whole library.

#include "oscrat/approx.hpp"
#include "oscrat/calculus.hpp"
#include "oscrat/cauchy.hpp"
#include "oscrat/common.hpp"
#include "oscrat/io.hpp"
#include "oscrat/mobius.hpp"
#include "oscrat/oscillatory.hpp"
#include "oscrat/quadrature.hpp"
#include "oscrat/report.hpp"
#include "oscrat/specfun.hpp"
#include "oscrat/testfn.hpp"
#include "oscrat/trig.hpp"

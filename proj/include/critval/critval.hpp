/// Umbrella header.
#pragma once

#include "critval/cauchy.hpp"
#include "critval/chain.hpp"
#include "critval/critpoly.hpp"
#include "critval/differential.hpp"
#include "critval/engine.hpp"
#include "critval/linalg.hpp"
#include "critval/poly_io.hpp"
#include "critval/polynomial.hpp"
#include "critval/rational.hpp"
#include "critval/rational_function.hpp"
#include "critval/recurrence.hpp"
#include "critval/reduction.hpp"
#include "critval/region.hpp"
#include "critval/report.hpp"
#include "critval/suite.hpp"
#include "critval/theorem_a.hpp"
#include "critval/variable.hpp"

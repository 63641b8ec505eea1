#pragma once

// Umbrella header for the whole library.

#include "gpois/catalog.hpp"
#include "gpois/cli.hpp"
#include "gpois/cohomology.hpp"
#include "gpois/derivation.hpp"
#include "gpois/grading.hpp"
#include "gpois/io.hpp"
#include "gpois/linalg.hpp"
#include "gpois/parse.hpp"
#include "gpois/poisson.hpp"
#include "gpois/poly.hpp"
#include "gpois/rational.hpp"
#include "gpois/skew.hpp"
#include "gpois/solver.hpp"
#include "gpois/twist.hpp"

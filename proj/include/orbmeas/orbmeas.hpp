#pragma once

#include "orbmeas/errors.hpp"
#include "orbmeas/measures.hpp"
#include "orbmeas/operators.hpp"
#include "orbmeas/oracle/haar.hpp"
#include "orbmeas/oracle/jacobi.hpp"
#include "orbmeas/oracle/monte_carlo.hpp"
#include "orbmeas/oracle/rng.hpp"
#include "orbmeas/polynomial.hpp"
#include "orbmeas/rational.hpp"
#include "orbmeas/rootsys.hpp"

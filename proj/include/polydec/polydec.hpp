// Graph polynomials by composition-order dynamic programming.
#pragma once

#include "polydec/decomposition.hpp"
#include "polydec/engine.hpp"
#include "polydec/graph.hpp"
#include "polydec/models.hpp"
#include "polydec/oracle.hpp"
#include "polydec/polynomial.hpp"

#ifndef REACHCOUNT_REACHCOUNT_HPP_
#define REACHCOUNT_REACHCOUNT_HPP_

#include "condensation.hpp"
#include "digraph.hpp"
#include "errors.hpp"
#include "forest.hpp"
#include "generate.hpp"
#include "incremental.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "solver.hpp"

#endif

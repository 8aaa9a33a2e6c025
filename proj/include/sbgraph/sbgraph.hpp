#pragma once

#include "sbgraph/b_resilience.hpp"
#include "sbgraph/connectivity.hpp"
#include "sbgraph/critical.hpp"
#include "sbgraph/digraph.hpp"
#include "sbgraph/dominators.hpp"
#include "sbgraph/error.hpp"
#include "sbgraph/io.hpp"
#include "sbgraph/oracle.hpp"
#include "sbgraph/random.hpp"
#include "sbgraph/sbcc.hpp"

#pragma once

#include "duality/algorithms.hpp"
#include "duality/arith.hpp"
#include "duality/baselines.hpp"
#include "duality/basis.hpp"
#include "duality/bench.hpp"
#include "duality/core.hpp"
#include "duality/oracle.hpp"
#include "duality/oracles.hpp"
#include "duality/state.hpp"
#include "duality/trace.hpp"

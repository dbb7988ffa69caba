#pragma once

// Umbrella header: the whole toolkit.

#include "amronet/comm_graph.hpp"
#include "amronet/coverage.hpp"
#include "amronet/geometry.hpp"
#include "amronet/patterns.hpp"

#include "amronet/sim/config.hpp"
#include "amronet/sim/engine.hpp"
#include "amronet/sim/events.hpp"
#include "amronet/sim/motion.hpp"
#include "amronet/sim/record.hpp"
#include "amronet/sim/rng.hpp"
#include "amronet/sim/scenario.hpp"

#include "amronet/deploy/agent_assisted.hpp"
#include "amronet/deploy/core.hpp"
#include "amronet/deploy/self_spreading.hpp"

#include "amronet/baselines/forces.hpp"

#include "amronet/exp/csv.hpp"
#include "amronet/exp/experiment.hpp"
#include "amronet/exp/presets.hpp"
#include "amronet/exp/scenario_io.hpp"
#include "amronet/exp/stats.hpp"
#include "amronet/exp/svg.hpp"

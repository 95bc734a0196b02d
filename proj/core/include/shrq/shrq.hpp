#pragma once

#include "shrq/asymptotics.hpp"
#include "shrq/cdf_tables.hpp"
#include "shrq/channel.hpp"
#include "shrq/gamma.hpp"
#include "shrq/metrics.hpp"
#include "shrq/optimizer.hpp"
#include "shrq/parallel.hpp"
#include "shrq/rng.hpp"
#include "shrq/sim.hpp"

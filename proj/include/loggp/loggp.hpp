#pragma once

// Umbrella header for the logGP numerical laboratory.

#include "loggp/checks.hpp"
#include "loggp/energy.hpp"
#include "loggp/errors.hpp"
#include "loggp/evolution.hpp"
#include "loggp/galerkin.hpp"
#include "loggp/grid.hpp"
#include "loggp/profiles.hpp"
#include "loggp/scalars.hpp"

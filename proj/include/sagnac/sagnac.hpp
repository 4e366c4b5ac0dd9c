#pragma once

#include "sagnac/absorption.hpp"
#include "sagnac/coherences.hpp"
#include "sagnac/comparison.hpp"
#include "sagnac/config.hpp"
#include "sagnac/constants.hpp"
#include "sagnac/design.hpp"
#include "sagnac/medium.hpp"
#include "sagnac/phase.hpp"
#include "sagnac/propagation.hpp"
#include "sagnac/report.hpp"
#include "sagnac/sweep.hpp"
#include "sagnac/types.hpp"
#include "sagnac/units.hpp"
#include "sagnac/validity.hpp"
#include "sagnac/velocity_grid.hpp"

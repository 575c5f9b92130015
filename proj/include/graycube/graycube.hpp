#pragma once

// Umbrella header for the whole library.

#include "graycube/cube.hpp"
#include "graycube/dot.hpp"
#include "graycube/gray.hpp"
#include "graycube/json_io.hpp"
#include "graycube/poset.hpp"
#include "graycube/render.hpp"
#include "graycube/retract.hpp"
#include "graycube/theta.hpp"
#include "graycube/total_order.hpp"
#include "graycube/twocat.hpp"
#include "graycube/util.hpp"

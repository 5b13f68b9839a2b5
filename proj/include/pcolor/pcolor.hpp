#pragma once

// Umbrella header for the packing-coloring toolkit.

#include "pcolor/canonical.hpp"
#include "pcolor/criticality.hpp"
#include "pcolor/cycles.hpp"
#include "pcolor/distance.hpp"
#include "pcolor/enumerate.hpp"
#include "pcolor/families.hpp"
#include "pcolor/g3.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/graph6.hpp"
#include "pcolor/packing.hpp"
#include "pcolor/verify.hpp"

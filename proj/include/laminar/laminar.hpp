#pragma once

// Umbrella header: combinatorial tangles, invariant oracles, branched
// surfaces, the laminar tangle family, and its certification machinery.

#include "laminar/branched_surface.hpp"
#include "laminar/family.hpp"
#include "laminar/goeritz.hpp"
#include "laminar/invariants.hpp"
#include "laminar/laurent.hpp"
#include "laminar/notation.hpp"
#include "laminar/planar_diagram.hpp"
#include "laminar/rational.hpp"
#include "laminar/rational_tangle.hpp"
#include "laminar/reidemeister.hpp"
#include "laminar/render.hpp"
#include "laminar/serialize.hpp"

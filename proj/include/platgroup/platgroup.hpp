#pragma once

// Everything: words, presentations, surface braids, plats, invariants, homology, verification.
#include "platgroup/error.hpp"
#include "platgroup/word.hpp"
#include "platgroup/presentation.hpp"
#include "platgroup/surface_braid.hpp"
#include "platgroup/plat.hpp"
#include "platgroup/smith.hpp"
#include "platgroup/finite_group.hpp"
#include "platgroup/invariants.hpp"
#include "platgroup/laurent.hpp"
#include "platgroup/homology.hpp"
#include "platgroup/verify.hpp"

#pragma once

// Umbrella header for the twalk library.

#include "twalk/block_form.hpp"
#include "twalk/creation_sequence.hpp"
#include "twalk/detection.hpp"
#include "twalk/eigensolver.hpp"
#include "twalk/graph.hpp"
#include "twalk/matrix.hpp"
#include "twalk/node_bounds.hpp"
#include "twalk/pst.hpp"
#include "twalk/rational.hpp"
#include "twalk/spectral_system.hpp"
#include "twalk/sweep.hpp"

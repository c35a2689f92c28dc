#pragma once

// Umbrella header for the whole library.

#include "halidon/codec.hpp"
#include "halidon/core_arith.hpp"
#include "halidon/dft.hpp"
#include "halidon/error.hpp"
#include "halidon/group_ring.hpp"
#include "halidon/halidon_analysis.hpp"
#include "halidon/protocol.hpp"
#include "halidon/rsa_core.hpp"

#pragma once

// Umbrella header.

#include "endosimplex/endo.hpp"
#include "endosimplex/serialize.hpp"
#include "endosimplex/simplex.hpp"
#include "endosimplex/strata.hpp"
#include "endosimplex/typemap.hpp"
#include "endosimplex/verify.hpp"

#pragma once

// Umbrella header.

#include "kbonacci/bigint.hpp"
#include "kbonacci/coefficients.hpp"
#include "kbonacci/emit.hpp"
#include "kbonacci/error.hpp"
#include "kbonacci/identity.hpp"
#include "kbonacci/poly.hpp"
#include "kbonacci/sequences.hpp"
#include "kbonacci/symbolic.hpp"

#pragma once

// Exact-arithmetic calculus for twisted products of graded homotopy data:
// the Fox function and its tables, the number-theoretic commutation
// criteria, graded space models with bilinear brackets, the level-n twisted
// groups, and class-2 torus truncations.

#include "foxcohen/bigint.hpp"
#include "foxcohen/catalog.hpp"
#include "foxcohen/cohen.hpp"
#include "foxcohen/fox.hpp"
#include "foxcohen/literals.hpp"
#include "foxcohen/model_io.hpp"
#include "foxcohen/numtheory.hpp"
#include "foxcohen/pi.hpp"
#include "foxcohen/torus.hpp"
#include "foxcohen/verify.hpp"

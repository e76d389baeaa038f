#pragma once

// Umbrella header for the whole library.

#include "mzv/combinatorics.hpp"
#include "mzv/composition.hpp"
#include "mzv/json_io.hpp"
#include "mzv/numeric_eval.hpp"
#include "mzv/quasi_shuffle.hpp"
#include "mzv/scalars.hpp"
#include "mzv/word_poly.hpp"

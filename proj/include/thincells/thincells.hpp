#pragma once

// Umbrella header for the core library. JSON bindings live in json_io.hpp
// and are pulled in separately by code that wants them.

#include "classify.hpp"
#include "errors.hpp"
#include "flag.hpp"
#include "matrix.hpp"
#include "matroid.hpp"
#include "numbers.hpp"
#include "plucker.hpp"
#include "sampling.hpp"
#include "subsets.hpp"

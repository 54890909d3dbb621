#pragma once

// Umbrella header for the library. The command-line front end lives in
// wstable/cli.hpp and is not included here.

#include "wstable/catalan.hpp"
#include "wstable/closure.hpp"
#include "wstable/cone.hpp"
#include "wstable/errors.hpp"
#include "wstable/ideal.hpp"
#include "wstable/io.hpp"
#include "wstable/monomial.hpp"
#include "wstable/series.hpp"
#include "wstable/tree.hpp"

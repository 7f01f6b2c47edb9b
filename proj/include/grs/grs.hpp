// Umbrella header.

#pragma once

#include "grs/antihom.hpp"
#include "grs/approx.hpp"
#include "grs/catalog.hpp"
#include "grs/core.hpp"
#include "grs/example_audit.hpp"
#include "grs/ideals.hpp"
#include "grs/quotient.hpp"
#include "grs/scenario.hpp"
#include "grs/theorems.hpp"

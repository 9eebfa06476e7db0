#pragma once

#include "mclt/arcsine.hpp"
#include "mclt/bigint.hpp"
#include "mclt/combinatorics.hpp"
#include "mclt/errors.hpp"
#include "mclt/moment.hpp"
#include "mclt/moment_io.hpp"
#include "mclt/rational.hpp"
#include "mclt/render.hpp"
#include "mclt/verify.hpp"

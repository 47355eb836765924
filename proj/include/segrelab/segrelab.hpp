#pragma once

// Umbrella header: the whole library.

#include "segrelab/budget.hpp"
#include "segrelab/cache.hpp"
#include "segrelab/cli.hpp"
#include "segrelab/curve.hpp"
#include "segrelab/depthlab.hpp"
#include "segrelab/ellfrob.hpp"
#include "segrelab/errors.hpp"
#include "segrelab/fields.hpp"
#include "segrelab/groebner.hpp"
#include "segrelab/ideal.hpp"
#include "segrelab/monomial.hpp"
#include "segrelab/parse.hpp"
#include "segrelab/polynomial.hpp"
#include "segrelab/primes.hpp"
#include "segrelab/report.hpp"
#include "segrelab/ring.hpp"
#include "segrelab/segre.hpp"
#include "segrelab/version.hpp"

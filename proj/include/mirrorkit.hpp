#pragma once

#include "mirrorkit/error.hpp"
#include "mirrorkit/lattice.hpp"
#include "mirrorkit/linalg.hpp"
#include "mirrorkit/laurent.hpp"
#include "mirrorkit/text.hpp"
#include "mirrorkit/univariate.hpp"
#include "mirrorkit/polytope.hpp"
#include "mirrorkit/period.hpp"
#include "mirrorkit/mutation.hpp"
#include "mirrorkit/graph.hpp"
#include "mirrorkit/mmlp.hpp"
#include "mirrorkit/recurrence.hpp"
#include "mirrorkit/json.hpp"

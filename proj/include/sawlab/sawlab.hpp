#pragma once

// Umbrella header: self-avoiding walk enumeration and connective-constant
// bounds on lazily defined quasi-transitive graphs.

#include "sawlab/version.hpp"
#include "sawlab/bigint.hpp"
#include "sawlab/vertex.hpp"
#include "sawlab/graph.hpp"
#include "sawlab/families.hpp"
#include "sawlab/transforms.hpp"
#include "sawlab/girth.hpp"
#include "sawlab/ball.hpp"
#include "sawlab/enumerate.hpp"
#include "sawlab/cache.hpp"
#include "sawlab/solve.hpp"
#include "sawlab/bounds.hpp"
#include "sawlab/sample.hpp"

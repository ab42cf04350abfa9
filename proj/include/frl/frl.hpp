#pragma once

#include "frl/error.hpp"
#include "frl/budget.hpp"
#include "frl/face_set.hpp"
#include "frl/complex.hpp"
#include "frl/minors.hpp"
#include "frl/shelling.hpp"
#include "frl/graph.hpp"
#include "frl/line_graph.hpp"
#include "frl/homology.hpp"
#include "frl/algebra.hpp"
#include "frl/families.hpp"
#include "frl/realize.hpp"
#include "frl/io.hpp"
#include "frl/corpus.hpp"
#include "frl/verify.hpp"
#include "frl/analyze.hpp"

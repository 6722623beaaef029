#pragma once

#include "vecchrom/chromatic.hpp"
#include "vecchrom/coloring.hpp"
#include "vecchrom/error.hpp"
#include "vecchrom/graph.hpp"
#include "vecchrom/graph_io.hpp"
#include "vecchrom/harness.hpp"
#include "vecchrom/io.hpp"
#include "vecchrom/linalg.hpp"
#include "vecchrom/onehom.hpp"
#include "vecchrom/params.hpp"
#include "vecchrom/programs.hpp"
#include "vecchrom/quantum.hpp"
#include "vecchrom/sdp.hpp"

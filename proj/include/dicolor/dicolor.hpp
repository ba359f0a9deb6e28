#pragma once

#include "dicolor/error.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/coloring.hpp"
#include "dicolor/reconfig.hpp"
#include "dicolor/walks.hpp"
#include "dicolor/verify.hpp"

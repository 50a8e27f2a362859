#pragma once

#include "audits.hpp"
#include "bound.hpp"
#include "cardano.hpp"
#include "crossings.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "geometry.hpp"
#include "halving_graph.hpp"
#include "io.hpp"

#pragma once

#include "latcon/congruence.hpp"
#include "latcon/dismantle.hpp"
#include "latcon/enumeration.hpp"
#include "latcon/error.hpp"
#include "latcon/graph_planarity.hpp"
#include "latcon/io.hpp"
#include "latcon/kr_catalog.hpp"
#include "latcon/lattice.hpp"
#include "latcon/planarity.hpp"
#include "latcon/poset.hpp"
#include "latcon/theorem.hpp"

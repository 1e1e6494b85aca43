#ifndef STICKFORGE_STICKFORGE_HPP
#define STICKFORGE_STICKFORGE_HPP

#include "bounds.hpp"
#include "catalog.hpp"
#include "diagram.hpp"
#include "enumerator.hpp"
#include "exact_geom.hpp"
#include "graph_type.hpp"
#include "invariants.hpp"
#include "laurent.hpp"
#include "moves.hpp"
#include "pd_code.hpp"
#include "shadow.hpp"

#endif  // STICKFORGE_STICKFORGE_HPP

#pragma once

#include "revpre/dynamics.hpp"
#include "revpre/generators.hpp"
#include "revpre/graph.hpp"
#include "revpre/maxdeg3.hpp"
#include "revpre/oracle.hpp"
#include "revpre/pre1.hpp"
#include "revpre/sat_reduction.hpp"
#include "revpre/tree_count.hpp"
#include "revpre/tree_pre.hpp"
#include "revpre/two_sat.hpp"

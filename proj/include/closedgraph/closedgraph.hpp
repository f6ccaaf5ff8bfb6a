#pragma once

#include "closedgraph/errors.hpp"
#include "closedgraph/verdict.hpp"
#include "closedgraph/graph.hpp"
#include "closedgraph/structure.hpp"
#include "closedgraph/labeling.hpp"
#include "closedgraph/closed.hpp"
#include "closedgraph/oracle.hpp"
#include "closedgraph/report.hpp"

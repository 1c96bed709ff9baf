#pragma once

#include "majority/analysis.hpp"
#include "majority/certification/count_ones.hpp"
#include "majority/certification/election_pred.hpp"
#include "majority/certification/election_prediction.hpp"
#include "majority/certification/fuzz.hpp"
#include "majority/certification/harness.hpp"
#include "majority/configuration.hpp"
#include "majority/dynamics.hpp"
#include "majority/gadgets.hpp"
#include "majority/graph.hpp"
#include "majority/io.hpp"
#include "majority/oracle.hpp"
#include "majority/rng.hpp"

#pragma once

// Umbrella header.

#include "sostar/rational.hpp"
#include "sostar/gaussian.hpp"
#include "sostar/matrix.hpp"
#include "sostar/curve.hpp"
#include "sostar/matching.hpp"
#include "sostar/lie.hpp"
#include "sostar/higgs.hpp"
#include "sostar/stability.hpp"
#include "sostar/general_criterion.hpp"
#include "sostar/aux_checkers.hpp"
#include "sostar/cayley.hpp"
#include "sostar/morse.hpp"
#include "sostar/deformation.hpp"
#include "sostar/lowrank.hpp"
#include "sostar/corpus.hpp"
#include "sostar/version.hpp"

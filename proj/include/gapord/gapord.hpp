#pragma once

#include "btheta.hpp"
#include "cnf.hpp"
#include "enumerate.hpp"
#include "gapseq.hpp"
#include "maps.hpp"
#include "pi.hpp"
#include "suites.hpp"
#include "theta.hpp"
#include "veblen.hpp"

#pragma once

#include "bandperm/canonical.hpp"
#include "bandperm/chain_io.hpp"
#include "bandperm/error.hpp"
#include "bandperm/factorize.hpp"
#include "bandperm/oracle.hpp"
#include "bandperm/permutation.hpp"
#include "bandperm/ranking.hpp"
#include "bandperm/structure.hpp"
#include "bandperm/surgery.hpp"
#include "bandperm/swap_set.hpp"
#include "bandperm/sweep.hpp"

#pragma once

#include "pairgraph/actions.hpp"
#include "pairgraph/error.hpp"
#include "pairgraph/field.hpp"
#include "pairgraph/group.hpp"
#include "pairgraph/io.hpp"
#include "pairgraph/pair_graph.hpp"
#include "pairgraph/reproduce.hpp"
#include "pairgraph/search.hpp"
#include "pairgraph/spectral.hpp"
#include "pairgraph/structure.hpp"
#include "pairgraph/subgroup.hpp"

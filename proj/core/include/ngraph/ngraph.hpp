#pragma once

#include "ngraph/core_partitions.hpp"
#include "ngraph/enumeration.hpp"
#include "ngraph/graph.hpp"
#include "ngraph/identities.hpp"
#include "ngraph/serialize.hpp"
#include "ngraph/set_predicates.hpp"

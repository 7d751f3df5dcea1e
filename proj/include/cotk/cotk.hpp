#pragma once

#include "cotk/constructions.hpp"
#include "cotk/errors.hpp"
#include "cotk/extremal.hpp"
#include "cotk/hypergraph.hpp"
#include "cotk/io.hpp"
#include "cotk/rational.hpp"
#include "cotk/search.hpp"

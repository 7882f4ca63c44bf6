#pragma once

#include "cliquedec/asymptotics.hpp"
#include "cliquedec/decomposition.hpp"
#include "cliquedec/enumerator.hpp"
#include "cliquedec/exact_cover.hpp"
#include "cliquedec/graph.hpp"
#include "cliquedec/io.hpp"
#include "cliquedec/order_experiment.hpp"
#include "cliquedec/removal.hpp"
#include "cliquedec/rng.hpp"
#include "cliquedec/run_cache.hpp"
#include "cliquedec/typicality.hpp"

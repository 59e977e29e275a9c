#pragma once

#include "softsim/axioms.hpp"
#include "softsim/diagnosis.hpp"
#include "softsim/distances.hpp"
#include "softsim/errors.hpp"
#include "softsim/exact.hpp"
#include "softsim/io.hpp"
#include "softsim/matrix.hpp"
#include "softsim/measure_value.hpp"
#include "softsim/ms_measures.hpp"
#include "softsim/registry.hpp"
#include "softsim/sampling.hpp"
#include "softsim/similarity.hpp"
#include "softsim/soft_set.hpp"
#include "softsim/worked_examples.hpp"

#pragma once

#include "lrcones/rational.hpp"
#include "lrcones/core.hpp"
#include "lrcones/triangular_array.hpp"
#include "lrcones/validation.hpp"
#include "lrcones/exact_matrix.hpp"
#include "lrcones/lr_triangle.hpp"
#include "lrcones/hive.hpp"
#include "lrcones/bz_triangle.hpp"
#include "lrcones/maps.hpp"
#include "lrcones/tableau.hpp"
#include "lrcones/lattice_search.hpp"
#include "lrcones/enumeration.hpp"
#include "lrcones/op_counter.hpp"
#include "lrcones/io.hpp"

#pragma once

#include "graphca/approx.hpp"
#include "graphca/canonical.hpp"
#include "graphca/coloring.hpp"
#include "graphca/constructions.hpp"
#include "graphca/covering_array.hpp"
#include "graphca/error.hpp"
#include "graphca/factorization.hpp"
#include "graphca/field.hpp"
#include "graphca/formats.hpp"
#include "graphca/graph.hpp"
#include "graphca/group.hpp"
#include "graphca/orthogonal_array.hpp"
#include "graphca/product.hpp"
#include "graphca/symbol_matrix.hpp"

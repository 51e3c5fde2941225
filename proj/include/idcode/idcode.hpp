#pragma once

#include "idcode/code_set.hpp"
#include "idcode/constructions.hpp"
#include "idcode/errors.hpp"
#include "idcode/formulas.hpp"
#include "idcode/graph.hpp"
#include "idcode/product_graph.hpp"
#include "idcode/render.hpp"
#include "idcode/solver.hpp"
#include "idcode/verify.hpp"
#include "idcode/vertex_set.hpp"

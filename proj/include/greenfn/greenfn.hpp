#pragma once

#include "greenfn/chebyshev.hpp"
#include "greenfn/closed_forms.hpp"
#include "greenfn/csv.hpp"
#include "greenfn/graph.hpp"
#include "greenfn/jacobi.hpp"
#include "greenfn/matrix.hpp"
#include "greenfn/products.hpp"
#include "greenfn/random_walk.hpp"
#include "greenfn/spectral.hpp"
#include "greenfn/util.hpp"
#include "greenfn/verify.hpp"

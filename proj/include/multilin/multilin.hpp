#pragma once

#include "multilin/alt_matrix.hpp"
#include "multilin/dense_matrix.hpp"
#include "multilin/errors.hpp"
#include "multilin/multiindex.hpp"
#include "multilin/multilinear.hpp"
#include "multilin/norms.hpp"
#include "multilin/polymap.hpp"
#include "multilin/rational.hpp"
#include "multilin/sym_matrix.hpp"

#pragma once

// Umbrella header: exact invariants of finite-dimensional nilpotent Lie
// algebras over Q -- non-abelian tensor square, exterior square, Schur
// multiplier, and the dimension bound (n-m)(n-1)+2.

#include "lietensor/algebra_io.hpp"
#include "lietensor/catalog.hpp"
#include "lietensor/errors.hpp"
#include "lietensor/homology.hpp"
#include "lietensor/invariants.hpp"
#include "lietensor/lie_algebra.hpp"
#include "lietensor/matrix.hpp"
#include "lietensor/rational.hpp"
#include "lietensor/subspace.hpp"
#include "lietensor/tensor_square.hpp"

#pragma once

// Traces of inverse powers of bidiagonal Gram matrices, by four independent
// recurrence engines and a dense brute-force oracle, with the derived
// monotone lower bounds of the minimal singular value.

#include "bidiag/bounds.hpp"
#include "bidiag/dense_oracle.hpp"
#include "bidiag/derivative.hpp"
#include "bidiag/errors.hpp"
#include "bidiag/io.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/methods.hpp"
#include "bidiag/subtraction_free.hpp"
#include "bidiag/subtractive.hpp"
#include "bidiag/unified.hpp"

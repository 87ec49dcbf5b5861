#pragma once

#include "arith.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "jacobi.hpp"
#include "oracle.hpp"
#include "survey.hpp"
#include "theorem2.hpp"
#include "three_squares.hpp"

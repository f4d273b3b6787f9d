#pragma once

#include "pglinv/numtheory.hpp"
#include "pglinv/field.hpp"
#include "pglinv/poly.hpp"
#include "pglinv/linalg.hpp"
#include "pglinv/projective.hpp"
#include "pglinv/action.hpp"
#include "pglinv/rational.hpp"
#include "pglinv/counting.hpp"
#include "pglinv/verify.hpp"

#pragma once

#include "spike/laurent.hpp"
#include "spike/measure.hpp"
#include "spike/operators.hpp"
#include "spike/pi_scalar.hpp"
#include "spike/quadrature.hpp"
#include "spike/rational.hpp"

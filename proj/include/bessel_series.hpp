#pragma once

#include "bessel_series/errors.hpp"
#include "bessel_series/quadrature.hpp"
#include "bessel_series/series.hpp"
#include "bessel_series/special.hpp"
#include "bessel_series/summation.hpp"
#include "bessel_series/trig_series.hpp"
#include "bessel_series/verification.hpp"

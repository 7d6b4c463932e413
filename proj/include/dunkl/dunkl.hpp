#ifndef DUNKL_DUNKL_HPP
#define DUNKL_DUNKL_HPP

#include "dunkl/core.hpp"
#include "dunkl/dual.hpp"
#include "dunkl/polykernel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/wavefunctions.hpp"
#include "dunkl/report.hpp"
#include "dunkl/operator_algebra.hpp"
#include "dunkl/overlaps.hpp"

#endif

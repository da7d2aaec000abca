#ifndef CPERM_CPERM_HPP
#define CPERM_CPERM_HPP

#include "cperm/formulas.hpp"
#include "cperm/mpoly.hpp"
#include "cperm/numeric.hpp"
#include "cperm/oracle.hpp"
#include "cperm/output.hpp"
#include "cperm/perm.hpp"
#include "cperm/series.hpp"
#include "cperm/verify.hpp"

#endif

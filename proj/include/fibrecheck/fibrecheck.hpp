#pragma once

#include "fibrecheck/cli.hpp"
#include "fibrecheck/coefficient.hpp"
#include "fibrecheck/errors.hpp"
#include "fibrecheck/groebner.hpp"
#include "fibrecheck/idealops.hpp"
#include "fibrecheck/layout.hpp"
#include "fibrecheck/module.hpp"
#include "fibrecheck/monomial.hpp"
#include "fibrecheck/monomial_order.hpp"
#include "fibrecheck/parser.hpp"
#include "fibrecheck/polynomial.hpp"
#include "fibrecheck/power.hpp"
#include "fibrecheck/report.hpp"
#include "fibrecheck/verticality.hpp"

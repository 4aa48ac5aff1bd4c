#pragma once

#include "hhcert/audit.hpp"
#include "hhcert/bounds.hpp"
#include "hhcert/convexity.hpp"
#include "hhcert/functions.hpp"
#include "hhcert/integrate.hpp"
#include "hhcert/interval.hpp"
#include "hhcert/means.hpp"
#include "hhcert/quad_bounds.hpp"
#include "hhcert/special.hpp"
#include "hhcert/version.hpp"

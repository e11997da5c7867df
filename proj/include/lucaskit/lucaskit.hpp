#pragma once

#include "lucaskit/extring.hpp"
#include "lucaskit/identities.hpp"
#include "lucaskit/idexpr.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/parallel.hpp"
#include "lucaskit/rational.hpp"
#include "lucaskit/ratpoly.hpp"
#include "lucaskit/report.hpp"
#include "lucaskit/series.hpp"

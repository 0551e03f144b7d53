#pragma once

#include "minsing/errors.hpp"
#include "minsing/weight.hpp"
#include "minsing/root_system.hpp"
#include "minsing/weyl.hpp"
#include "minsing/layers.hpp"
#include "minsing/minimizers.hpp"
#include "minsing/e_tables.hpp"
#include "minsing/closed_form.hpp"
#include "minsing/report.hpp"

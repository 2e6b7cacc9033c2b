#pragma once

#include "dzeta/bigrat.hpp"
#include "dzeta/check.hpp"
#include "dzeta/curves.hpp"
#include "dzeta/derived.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/finite_field.hpp"
#include "dzeta/invariants.hpp"
#include "dzeta/mult_struct.hpp"
#include "dzeta/poly.hpp"
#include "dzeta/ratfunc.hpp"
#include "dzeta/rh.hpp"
#include "dzeta/series.hpp"
#include "dzeta/sweep.hpp"

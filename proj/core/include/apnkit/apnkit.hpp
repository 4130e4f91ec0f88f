#pragma once

#include "apnkit/defect.hpp"
#include "apnkit/diffcore.hpp"
#include "apnkit/error.hpp"
#include "apnkit/field.hpp"
#include "apnkit/flats.hpp"
#include "apnkit/function_spec.hpp"
#include "apnkit/functions.hpp"
#include "apnkit/parallel.hpp"
#include "apnkit/spectra.hpp"
#include "apnkit/power_families.hpp"

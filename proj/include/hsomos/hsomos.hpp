#ifndef HSOMOS_HSOMOS_HPP
#define HSOMOS_HSOMOS_HPP

#include <hsomos/cf_engine.hpp>
#include <hsomos/errors.hpp>
#include <hsomos/gf_lang.hpp>
#include <hsomos/hankel.hpp>
#include <hsomos/power_series.hpp>
#include <hsomos/presets.hpp>
#include <hsomos/rational.hpp>
#include <hsomos/report.hpp>
#include <hsomos/somos.hpp>
#include <hsomos/verify.hpp>

#endif

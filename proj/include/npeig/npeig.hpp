#pragma once

#include "npeig/ball.hpp"
#include "npeig/disk.hpp"
#include "npeig/errors.hpp"
#include "npeig/oracle.hpp"
#include "npeig/quadrature.hpp"
#include "npeig/record.hpp"
#include "npeig/specfun.hpp"
#include "npeig/sweep.hpp"
#include "npeig/verify.hpp"

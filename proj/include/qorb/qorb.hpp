#pragma once

#include "cache.hpp"
#include "chen_ruan.hpp"
#include "classical.hpp"
#include "consistency.hpp"
#include "expression.hpp"
#include "groebner.hpp"
#include "gw_oracle.hpp"
#include "json_io.hpp"
#include "quantum.hpp"
#include "verify.hpp"
#include "version.hpp"

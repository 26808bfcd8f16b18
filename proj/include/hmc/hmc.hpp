#pragma once

#include "hmc/chain_complex.hpp"
#include "hmc/css_code.hpp"
#include "hmc/error.hpp"
#include "hmc/gf2.hpp"
#include "hmc/hypermap.hpp"
#include "hmc/io.hpp"
#include "hmc/surface.hpp"

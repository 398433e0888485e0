#pragma once

#include "modp.hpp"
#include "bigraded.hpp"
#include "algebra.hpp"
#include "dg_module.hpp"
#include "semifree.hpp"
#include "lkd.hpp"
#include "homdual.hpp"
#include "qmodel.hpp"
#include "random.hpp"
#include "resolution.hpp"
#include "sl2.hpp"
#include "koszulkit/suites.hpp"

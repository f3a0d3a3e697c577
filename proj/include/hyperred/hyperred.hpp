#pragma once

// Umbrella header.

#include "hyperred/ad_rht.hpp"
#include "hyperred/algext.hpp"
#include "hyperred/cx_reduction.hpp"
#include "hyperred/elementary.hpp"
#include "hyperred/exact_arith.hpp"
#include "hyperred/factor_q.hpp"
#include "hyperred/format.hpp"
#include "hyperred/json_io.hpp"
#include "hyperred/kernel_shell.hpp"
#include "hyperred/matryoshka.hpp"
#include "hyperred/parse.hpp"
#include "hyperred/printing.hpp"
#include "hyperred/rational.hpp"
#include "hyperred/reductions.hpp"
#include "hyperred/tower.hpp"
#include "hyperred/upoly.hpp"
#include "hyperred/value.hpp"
#include "hyperred/vf_membership.hpp"

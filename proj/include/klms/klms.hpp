#pragma once

// Umbrella header: exact Kazhdan-Lusztig polynomials of type A, parabolic and
// double-parabolic variants, Zelevinsky multisegment posets, and the
// parametrization and reduction maps between them.

#include "klms/bigint.hpp"
#include "klms/errors.hpp"
#include "klms/gen_set.hpp"
#include "klms/half_exp_poly.hpp"
#include "klms/kl.hpp"
#include "klms/ms_poset.hpp"
#include "klms/multisegment.hpp"
#include "klms/param.hpp"
#include "klms/permutation.hpp"
#include "klms/reduce.hpp"
#include "klms/report.hpp"
#include "klms/symmetric_group.hpp"
#include "klms/verify.hpp"

#pragma once

#include "qroots/croots.hpp"
#include "qroots/errors.hpp"
#include "qroots/powers.hpp"
#include "qroots/prng.hpp"
#include "qroots/qpoly.hpp"
#include "qroots/quaternion.hpp"
#include "qroots/real_polynomial.hpp"
#include "qroots/selftest.hpp"
#include "qroots/solver.hpp"
#include "qroots/testgen.hpp"
#include "qroots/vieta.hpp"

#pragma once

#include "clifflag/algebra.hpp"
#include "clifflag/conjugacy.hpp"
#include "clifflag/error.hpp"
#include "clifflag/lagrange.hpp"
#include "clifflag/linear_solve.hpp"
#include "clifflag/multivector.hpp"
#include "clifflag/oracle.hpp"
#include "clifflag/polynomial.hpp"
#include "clifflag/quaternion_split.hpp"
#include "clifflag/rational.hpp"
#include "clifflag/roots.hpp"
#include "clifflag/signature.hpp"
#include "clifflag/text.hpp"

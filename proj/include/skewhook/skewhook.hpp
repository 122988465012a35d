#pragma once

#include "bicolored.hpp"
#include "bigint.hpp"
#include "bijection_check.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "excited.hpp"
#include "identities.hpp"
#include "insertion.hpp"
#include "partition.hpp"
#include "polynomial.hpp"

#pragma once

#include "charsum/cycint.hpp"
#include "charsum/cyclotomy.hpp"
#include "charsum/error.hpp"
#include "charsum/expsum.hpp"
#include "charsum/field.hpp"
#include "charsum/jacobsthal.hpp"
#include "charsum/parallel.hpp"
#include "charsum/sequences.hpp"
#include "charsum/verify.hpp"
#include "charsum/walsh.hpp"

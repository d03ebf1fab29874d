#pragma once

#include "splitorder/conditions.hpp"
#include "splitorder/errors.hpp"
#include "splitorder/lyndon.hpp"
#include "splitorder/numeric.hpp"
#include "splitorder/poly.hpp"
#include "splitorder/rational.hpp"
#include "splitorder/series.hpp"

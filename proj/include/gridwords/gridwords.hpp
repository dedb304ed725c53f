#pragma once

#include "gridwords/cutting2d.hpp"
#include "gridwords/errors.hpp"
#include "gridwords/intersect3d.hpp"
#include "gridwords/rauzy.hpp"
#include "gridwords/surd.hpp"
#include "gridwords/word.hpp"

#pragma once

#include "kncrystal/admissible.hpp"
#include "kncrystal/alphabet.hpp"
#include "kncrystal/column_maps.hpp"
#include "kncrystal/crystal.hpp"
#include "kncrystal/dot.hpp"
#include "kncrystal/enumerate.hpp"
#include "kncrystal/jdt.hpp"
#include "kncrystal/json_io.hpp"
#include "kncrystal/lr.hpp"
#include "kncrystal/partition.hpp"
#include "kncrystal/tableau.hpp"

#pragma once

#include "tensym/algebra.hpp"
#include "tensym/congruence.hpp"
#include "tensym/dot.hpp"
#include "tensym/duality.hpp"
#include "tensym/enumerate.hpp"
#include "tensym/instances.hpp"
#include "tensym/lattice.hpp"
#include "tensym/model.hpp"
#include "tensym/poset.hpp"
#include "tensym/space.hpp"

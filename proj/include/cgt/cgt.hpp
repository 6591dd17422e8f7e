#pragma once

#include "cgt/bitset.hpp"
#include "cgt/catalog.hpp"
#include "cgt/errors.hpp"
#include "cgt/group.hpp"
#include "cgt/permutation.hpp"
#include "cgt/poset.hpp"
#include "cgt/presentation.hpp"
#include "cgt/subgroup_posets.hpp"
#include "cgt/todd_coxeter.hpp"
#include "cgt/verify.hpp"

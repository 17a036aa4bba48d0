#pragma once

#include "error.hpp"
#include "perm.hpp"
#include "numbers.hpp"
#include "group.hpp"
#include "bitset.hpp"
#include "ambient.hpp"
#include "subgroups.hpp"
#include "normal.hpp"
#include "chief.hpp"
#include "quotient.hpp"
#include "pi_property.hpp"
#include "structure.hpp"
#include "corpus.hpp"
#include "harness.hpp"

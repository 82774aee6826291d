#pragma once

// Umbrella header: the whole library.

#include "skewbrace/automorphism.hpp"
#include "skewbrace/brace.hpp"
#include "skewbrace/catalog.hpp"
#include "skewbrace/enumeration.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/holomorph.hpp"
#include "skewbrace/io.hpp"
#include "skewbrace/isoclinism.hpp"
#include "skewbrace/parallel.hpp"
#include "skewbrace/perm.hpp"
#include "skewbrace/properties.hpp"
#include "skewbrace/structure.hpp"

#pragma once

#include "schur/bits.hpp"
#include "schur/bounds.hpp"
#include "schur/cnf.hpp"
#include "schur/coloring.hpp"
#include "schur/constructions.hpp"
#include "schur/doc.hpp"
#include "schur/error.hpp"
#include "schur/search.hpp"
#include "schur/templates.hpp"

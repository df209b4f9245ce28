// Umbrella header: exact rational arithmetic, integer lattice algorithms,
// rational polyhedra, finitely generated monoids in Z^n, partially ordered
// abelian groups, the example catalog, and the instance/report I/O layer.

#pragma once

#include "catalog.hpp"
#include "int_linalg.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "monoid.hpp"
#include "ordgroup.hpp"
#include "polyhedra.hpp"
#include "qlinalg.hpp"
#include "rational.hpp"

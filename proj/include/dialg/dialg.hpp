#pragma once

#include "dialg/cohomology.hpp"
#include "dialg/deformations.hpp"
#include "dialg/dialgebra.hpp"
#include "dialg/error.hpp"
#include "dialg/extensions.hpp"
#include "dialg/linalg.hpp"
#include "dialg/matrix.hpp"
#include "dialg/oriented.hpp"
#include "dialg/rational.hpp"
#include "dialg/report.hpp"
#include "dialg/trees.hpp"

#pragma once

// Convenience umbrella for the whole library.

#include "edtop/claim.hpp"
#include "edtop/conditions.hpp"
#include "edtop/enumerate.hpp"
#include "edtop/errors.hpp"
#include "edtop/harness.hpp"
#include "edtop/io.hpp"
#include "edtop/pointset.hpp"
#include "edtop/topology.hpp"

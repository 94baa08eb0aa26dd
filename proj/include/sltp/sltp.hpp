#pragma once

#include "sltp/construction.hpp"
#include "sltp/errors.hpp"
#include "sltp/families.hpp"
#include "sltp/io.hpp"
#include "sltp/lipschitz.hpp"
#include "sltp/metric_space.hpp"
#include "sltp/molecule.hpp"
#include "sltp/rational.hpp"
#include "sltp/slice.hpp"
#include "sltp/transport.hpp"
#include "sltp/trapezoid.hpp"

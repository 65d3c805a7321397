#pragma once

#include "dicot/canonical.hpp"
#include "dicot/engine.hpp"
#include "dicot/enumerate.hpp"
#include "dicot/errors.hpp"
#include "dicot/forms.hpp"
#include "dicot/invert.hpp"
#include "dicot/notation.hpp"
#include "dicot/order.hpp"
#include "dicot/outcomes.hpp"

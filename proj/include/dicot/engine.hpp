#pragma once

#include "dicot/canonical.hpp"
#include "dicot/forms.hpp"
#include "dicot/invert.hpp"
#include "dicot/order.hpp"
#include "dicot/outcomes.hpp"

namespace dicot {

/// A store together with every solver layered on it, sharing memo tables.
struct Engine {
  Store store;
  OutcomeSolver outcomes{store};
  Order order{outcomes};
  Canonicalizer canon{store, order};
  Inverter invert{store, order, canon};
};

}  // namespace dicot

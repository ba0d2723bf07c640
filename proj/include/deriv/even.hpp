#pragma once

#include "deriv/element.hpp"
#include "deriv/rules.hpp"

namespace deriv {

// The even numbers: f1 : () |-> 0 and f2 : (a) |-> a + 2.
RuleSystem<Natural> even_system();

}  // namespace deriv

#pragma once

#include "core/cursor.hpp"
#include "deriv/natded.hpp"

namespace deriv::natded::detail {

Prop parse_prop(deriv::detail::Cursor& in);

// Comma-separated propositions, possibly none, stopping before `stop`.
Context parse_context(deriv::detail::Cursor& in, std::string_view stop);

}  // namespace deriv::natded::detail

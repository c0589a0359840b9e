#pragma once

#include <ostream>

namespace miortho {

// Runs the bundled verification matrix, printing one PASS/FAIL line per
// criterion.  Returns true when every criterion passes.
bool runAcceptanceSuite(std::ostream& out);

} // namespace miortho

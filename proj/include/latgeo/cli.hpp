#pragma once

#include <iosfwd>

namespace latgeo::cli {

// The whole command-line surface, callable in-process (the tests drive it
// with string streams). Exit codes: 0 = the operation ran (mathematical
// findings such as "IDP fails here" are results, not errors), 1 = I/O or
// parse problems (including flag misuse), 2 = violated mathematical
// preconditions (degenerate polytope where facets are needed, bad parameter
// ranges, dimension limits).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace latgeo::cli

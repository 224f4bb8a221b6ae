#pragma once

#include <iosfwd>

namespace pgroup::cli {

// Full command line driver against explicit streams, so tests can run it
// in-process. Exit status: 0 pass, 1 validation failure (report on out),
// 2 structural or usage error (diagnostic on err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgroup::cli

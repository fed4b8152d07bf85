#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedge::cli {

/// Runs one CLI invocation.  Returns 0 on success (canonical JSON on out),
/// 1 on domain errors (error JSON on err) and 2 on usage errors.  Output is
/// byte-identical for identical argument vectors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wedge::cli

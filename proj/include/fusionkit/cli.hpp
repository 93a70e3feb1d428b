#pragma once

#include <iosfwd>

namespace fusionkit::cli {

/// Exit codes: 0 success, 1 domain refusal, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fusionkit::cli

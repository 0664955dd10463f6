#pragma once

namespace rankcrit {

/// Command-line entry point. Exit codes: 0 success (and Certified when
/// --expect certified), 1 for Inconclusive/UpperBound under --expect certified
/// or runtime failures, 2 for input errors.
int cli_dispatch(int argc, const char* const* argv);

}  // namespace rankcrit

#pragma once

namespace fibered {

// exit codes: 0 pass, 1 fail, 2 parse error, 3 unsupported context
int cli_main(int argc, const char* const* argv);

}  // namespace fibered

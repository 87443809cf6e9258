#pragma once

namespace flowlab {

// Exit codes: 0 success, 1 infeasible / verification failure, 2 usage error,
// 3 oracle budget exhausted.
int cli_main(int argc, char** argv);

}  // namespace flowlab

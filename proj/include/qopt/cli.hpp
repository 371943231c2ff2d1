// Copyright 2026 The qopt-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QOPT_CLI_HPP
#define QOPT_CLI_HPP

namespace qopt {

// Entry point behind the qopt-bench binary, kept callable in-process so the
// tests can drive the full command surface. Returns the process exit code:
// 0 on success, 1 for usage or configuration errors, 2 for runtime failures.
int cli_main(int argc, const char *const *argv);

}  // namespace qopt

#endif

// SPDX-License-Identifier: Apache-2.0
//
// rissim: system-level simulation of RIS-assisted mmWave vehicular links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISSIM_CLI_HPP
#define RISSIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rissim
{

enum ExitCode : int
{
    kExitOk = 0,
    kExitUsage = 1,
    kExitInput = 2,      // config, ingest or input file errors
    kExitOutput = 3,     // output location not writable
    kExitTimestamps = 4, // compared logs are not aligned
};

// Subcommands: run, compare, fixture canyon, validate. args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// SHA-256 of the given bytes as lowercase hex.
std::string sha256_hex(const std::string &bytes);

} // namespace rissim

#endif

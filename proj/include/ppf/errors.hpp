/*
   Copyright 2026 The ppf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PPF_ERRORS_HPP
#define PPF_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace ppf {

/// All library failures carry a stable machine-readable code ("NonPrime",
/// "MixedFields", ...) next to the human-readable message.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message)
{
    throw error(std::move(code), message);
}

}  // namespace ppf

#endif

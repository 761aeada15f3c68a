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

#ifndef PPF_REPORT_HPP
#define PPF_REPORT_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "families.hpp"

// Machine-readable document formats: FamilySpec (family name first, then
// key = value per line) and the key = value report emitted by the CLI.
// Output is deterministic for fixed inputs.

namespace ppf {

inline constexpr int kReportSchemaVersion = 1;

struct FamilySpec {
    std::string family;
    Field field;
    std::map<std::string, std::string> params;

    std::string str() const
    {
        std::ostringstream os;
        os << family << '\n';
        os << "field = " << field.spec() << '\n';
        for (const auto& [k, v] : params) os << k << " = " << v << '\n';
        return os.str();
    }

    static FamilySpec parse(const std::string& text)
    {
        std::istringstream is(text);
        std::string family_line;
        if (!std::getline(is, family_line) || family_line.empty())
            fail("BadFamilySpec", "expected the family name on the first line");
        std::map<std::string, std::string> params;
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos) fail("BadFamilySpec", "expected key = value");
            auto trim = [](std::string s) {
                const auto a = s.find_first_not_of(" \t");
                const auto b = s.find_last_not_of(" \t");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            params[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        }
        auto it = params.find("field");
        if (it == params.end()) fail("BadFamilySpec", "missing field = p^m/e spec");
        Field f = Field::from_spec(it->second);
        params.erase(it);
        return FamilySpec{family_line, f, std::move(params)};
    }
};

inline void write_report(std::ostream& os, const ConstructionReport& rep,
                         double elapsed_ms = -1.0)
{
    os << "schema_version = " << kReportSchemaVersion << '\n';
    os << "family = " << rep.family << '\n';
    os << "field = " << rep.field.spec() << '\n';
    for (const auto& [k, v] : rep.meta) os << k << " = " << v << '\n';
    for (const auto& c : rep.conditions)
        os << "condition \"" << c.name << "\" = " << (c.holds ? "true" : "false") << '\n';
    os << "poly = " << rep.poly.str() << '\n';
    os << "poly_degree = " << rep.poly.degree() << '\n';
    os << "predicted = " << (rep.predicted ? "true" : "false") << '\n';
    if (rep.verified) os << "verified = " << (*rep.verified ? "true" : "false") << '\n';
    if (elapsed_ms >= 0.0) os << "elapsed_ms = " << elapsed_ms << '\n';
}

}  // namespace ppf

#endif

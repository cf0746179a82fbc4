/*
   Copyright 2026 The atinf Authors

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

// Prints the critical values at infinity and the global invariants of each
// polynomial given on the command line, or of a few classic examples.

#include <iostream>
#include <string>
#include <vector>

#include "atinf/atinf.hpp"

namespace {

std::string join(const std::vector<atinf::Value>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + vs[i].to_string();
    return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> inputs(argv + 1, argv + argc);
    if (inputs.empty()) inputs = {"y*(x*y-1)", "x*(y^2-1)", "(x*y^2-y-1)^2 + (y^2-1)^2", "x^2 + y^2"};
    int status = 0;
    for (const auto& s : inputs) {
        try {
            atinf::Report r = atinf::analyze(atinf::parse_poly(s));
            std::cout << s << "\n  Sigma_fin = " << join(r.sigma_fin) << "\n  Sigma_inf = " << join(r.sigma_infinity)
                      << "\n";
            if (r.global)
                std::cout << "  mu = " << r.global->mu << ", lambda = " << r.global->lambda
                          << ", rank H1 = " << r.global->rank_h1 << (r.global->lower_bound ? " (lower bound)" : "")
                          << "\n";
        } catch (const atinf::Error& e) {
            std::cout << s << "\n  " << e.code() << ": " << e.what() << "\n";
            status = 1;
        }
    }
    return status;
}

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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "atinf/atinf.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kParseError = 2;
constexpr int kPartial = 3;

struct BadArgument : std::runtime_error {
    using std::runtime_error::runtime_error;
};

atinf::Rational rational_arg(const std::string& s, const char* what) {
    try {
        return atinf::Rational::parse(s);
    } catch (const std::invalid_argument&) {
        throw BadArgument(std::string("invalid ") + what + " '" + s + "'");
    } catch (const atinf::DivisionByZero&) {
        throw BadArgument(std::string("invalid ") + what + " '" + s + "'");
    }
}

atinf::PointAtInfinity point_arg(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw BadArgument("point must be written a:b, got '" + s + "'");
    return {rational_arg(s.substr(0, colon), "point coordinate"), rational_arg(s.substr(colon + 1), "point coordinate"),
            0};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
}

void print_syntax_error(const std::string& input, const atinf::SyntaxError& e) {
    std::cerr << "error: " << e.code() << ": " << e.message() << "\n";
    std::cerr << "  " << input << "\n";
    std::cerr << "  " << std::string(std::min(e.offset(), input.size()), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Critical values at infinity of polynomials in two variables", "atinf"};
    app.set_version_flag("--version", atinf::kVersion);
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Classify the points and values at infinity of f");
    std::string poly, point, json_path, dot_path;
    std::vector<std::string> values;
    bool resolve = false, gtilde = false;
    int budget = 0, trunc = 0;
    analyze->add_option("poly", poly, "Polynomial in x and y, e.g. \"y*(x*y-1)\"")->required();
    analyze->add_option("--point", point, "Restrict to the point [a,b,0], written a:b");
    analyze->add_option("--values", values, "Extra finite values to classify")->delimiter(',');
    analyze->add_flag("--resolve", resolve, "Resolve the pencil and check condition R");
    analyze->add_flag("--gtilde", gtilde, "Compute g-tilde from the resolution of (f, f_x, f_y)");
    analyze->add_option("--json", json_path, "Write the JSON report to PATH");
    analyze->add_option("--dot", dot_path, "Write the dual graphs to PATH (implies --resolve)");
    analyze->add_option("--budget", budget, "Maximum degree of a number field extension")->check(CLI::PositiveNumber);
    analyze->add_option("--trunc", trunc, "Series truncation order for the polar branches")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    atinf::AnalyzeOptions opt;
    atinf::QBiPoly f;
    try {
        f = atinf::parse_poly(poly);
        if (!point.empty()) opt.point = point_arg(point);
        for (const auto& v : values) opt.values.push_back(rational_arg(v, "value"));
    } catch (const atinf::SyntaxError& e) {
        print_syntax_error(poly, e);
        return kParseError;
    } catch (const BadArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    opt.resolve = resolve || !dot_path.empty();
    opt.gtilde = gtilde;
    if (budget > 0) opt.polar.budget.max_degree = budget;
    if (trunc > 0) opt.polar.trunc = trunc;

    try {
        atinf::Report r = atinf::analyze(f, opt);
        std::cout << atinf::format_text(r);
        if (!json_path.empty()) write_file(json_path, atinf::emit_json(r));
        if (!dot_path.empty()) {
            std::string dot;
            for (const auto& pr : r.per_point) {
                dot += "// " + pr.p.to_string() + "\n";
                dot += pr.dot ? *pr.dot : "// no resolution\n";
            }
            write_file(dot_path, dot);
        }
        return r.partial() ? kPartial : kOk;
    } catch (const atinf::Error& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kFailure;
}

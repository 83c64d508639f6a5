#ifndef MINTERP_PROBLEM_IO_HPP
#define MINTERP_PROBLEM_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minterp/problem.hpp"

namespace minterp {

// A parsed problem file: the problem plus the optional value vector
// (flattened condition order) used by the interpolate command.
struct ProblemFile {
    Problem problem;
    std::optional<std::vector<Rational>> values;
};

// JSON problem document:
//
// {
//   "variables": ["x", "y"],
//   "order": {"kind": "grlex", "precedence": ["x", "y"]},
//   "sites": [{"point": ["0", "0"], "conditions": ["1", "x"]}],
//   "values": ["0", "1"]                                        // optional
// }
//
// Rationals travel as strings; precedence lists variables most significant
// first. Validation failures throw Error with a description.
ProblemFile load_problem(std::istream& in);
ProblemFile load_problem_text(const std::string& text);

std::string problem_to_json(const ProblemFile& file);

}  // namespace minterp

#endif

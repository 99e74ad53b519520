#pragma once
// JSON model descriptors:
//   {"family": "exp", "lambda": 1 | [re, im], "R_prime": 2, "normalize": true}
//   {"family": "cosine", "a": ..., "b": ..., "R_prime": ..., "normalize": true}
//   {"family": "tube", "preset": "fold" | "spiral"} or {"family": "tube", "centerline": [[x, y], ...], "halfwidth": h}
//   {"family": "poincare", "c": ...}                     (entire functions only)
//   {"family": "compose", "models": [...], "a": 0}

#include <string>

#include <json.hpp>

#include "blog/entire.hpp"
#include "blog/models.hpp"

namespace blog {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

cplx complex_from_json(const json& j);
json complex_to_json(cplx z);

ModelPtr model_from_json(const json& j);
EntireModel entire_from_json(const json& j);

// inline JSON when the argument starts with '{', otherwise a file path
json load_json_arg(const std::string& arg);
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace blog

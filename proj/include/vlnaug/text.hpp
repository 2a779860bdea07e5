#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vlnaug {

// Lowercases, strips . , ; : ! ? " ' and splits on whitespace.
std::vector<std::string> tokenize(std::string_view text);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace vlnaug

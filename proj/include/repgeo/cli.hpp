#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace repgeo {

/// 0 holds/equivalent/member/ok, 1 fails/not-equivalent/non-member,
/// 2 unknown, 3 error.
int exit_code(std::string_view outcome);

/// Runs one command; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace repgeo

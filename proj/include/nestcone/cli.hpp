#pragma once
#include <iosfwd>

namespace nestcone {

// exit codes: 0 success, 1 verification failure or diff, 2 usage or parse error
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nestcone

#ifndef MZLAB_CLI_HPP
#define MZLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mzlab {

// Exit codes: 0 verified/decided, 1 falsified, 2 usage or parse error,
// 3 budget or window overflow.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzlab

#endif

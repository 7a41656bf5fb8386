#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace unipotent::cli {

// Runs the command line `args` (without the program name). Returns the
// process exit code: 0 ok, 1 bad input, 2 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs `body`, mapping DomainError to 1 and any other failure to 2 with
// a message on `err`.
int guarded(const std::function<int()>& body, std::ostream& err);

struct ReproRow {
    std::string label;
    std::string expected;
    std::string observed;
    bool pass = false;
};

// The quoted values the tool reproduces.
std::vector<ReproRow> reproduction_rows();

} // namespace unipotent::cli

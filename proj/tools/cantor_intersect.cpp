#include "cantor/cli.hpp"

#include <csignal>
#include <iostream>

namespace {

extern "C" void on_interrupt(int) { cantor::cli::cancel_flag().store(true); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);
    std::vector<std::string> args(argv + 1, argv + argc);
    return cantor::cli::run(args, std::cout, std::cerr);
}

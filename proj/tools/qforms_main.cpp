#include <cstdio>
#include <string>
#include <vector>

#include "qforms/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    qforms::CliResult res = qforms::run_cli(args);
    std::fputs(res.output.c_str(), stdout);
    std::fputc('\n', stdout);
    return res.exit_code;
}

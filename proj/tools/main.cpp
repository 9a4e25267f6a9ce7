#include <cstdlib>
#include <iostream>

#include "transduce/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    transduce::cli::Environment env;
    if (const char* db = std::getenv("TRANSDUCE_DB")) {
        env.db_path = db;
    }
    return transduce::cli::run(args, std::cout, std::cerr, env);
}

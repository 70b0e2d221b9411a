#include "cli.hpp"

int main(int argc, char** argv)
{
    return citekit::cli::run(argc, argv);
}

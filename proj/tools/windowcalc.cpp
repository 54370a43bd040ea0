#include <windowcalc/cli.hpp>

int main(int argc, char **argv)
{
    return windowcalc::cli::run(argc, argv);
}

#include "cli.hpp"

int main(int argc, char** argv) {
    return spectra::cli::run(argc, argv);
}

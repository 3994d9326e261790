#ifndef FANO_CLI_HPP
#define FANO_CLI_HPP

#include <cstdint>
#include <string>

#include "fano/geometry.hpp"

namespace fano::cli {

struct RunConfig {
    std::string command;
    Geometry geometry = Geometry::Quadric;
    int k = 2;
    std::uint64_t prime = 32003;
    std::uint64_t seed = 0;
    int trials = 3;
    int npoints = 200;
    std::string input;  // input file (validate, dd, jumping)
    std::string output; // output file; empty writes to stdout
    bool diagonal = false;
    int extra_search = 0; // v22 sample: best-effort extra point candidates
};

// Runs one command.  Exit code 0 on success, 1 on validation/computation
// failure, 2 on configuration errors.  Output is deterministic given
// (command, geometry, k, prime, seed).
int run(const RunConfig& cfg);

} // namespace fano::cli

#endif

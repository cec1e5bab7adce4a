#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "spectra/graph.hpp"

namespace spectra {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Standard graph6 ASCII encoding: N(n) followed by the upper triangle of the
// adjacency matrix in column order, six bits per character, offset 63, zero
// padded to a whole character.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header. Rejects bad characters, wrong
// length, nonzero padding bits, and orders outside 1..64.
Graph graph6_decode(std::string_view line);

}  // namespace spectra

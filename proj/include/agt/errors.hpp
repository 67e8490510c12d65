#pragma once
#include <stdexcept>

namespace agt {

// Malformed external input (graph6, edge lists, incidence files, Cayley tables).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact computation was refused because the instance exceeds a size bound.
// Callers that can degrade gracefully catch this; the CLI maps it to exit 3.
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cooperative cancellation flag interrupted a long search.
struct search_cancelled : std::runtime_error {
    search_cancelled() : std::runtime_error("search cancelled") {}
};

} // namespace agt

#include "pfshuffle/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pfshuffle {

unsigned default_parallelism() {
    const char* value = std::getenv("PFSHUFFLE_THREADS");
    if (value == nullptr) return 1;
    try {
        std::size_t used = 0;
        const long parsed = std::stol(value, &used);
        if (used != std::string(value).size() || parsed < 1 || parsed > 1024) return 1;
        return static_cast<unsigned>(parsed);
    } catch (const std::exception&) {
        return 1;
    }
}

} // namespace pfshuffle

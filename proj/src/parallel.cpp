#include "riskfront/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace riskfront {

unsigned resolve_threads(unsigned requested)
{
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RISKFRONT_THREADS")) {
        unsigned cap = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
        if (ec == std::errc{} && cap > 0) {
            n = std::min(n, cap);
        }
    }
    return n;
}

} // namespace riskfront

#include "bruhat/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace bruhat {

namespace {

int initial_threads() {
    if (const char* env = std::getenv("BRUHAT_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

std::atomic<int> g_max_threads{initial_threads()};

} // namespace

int max_threads() { return g_max_threads.load(); }

void set_max_threads(int n) { g_max_threads.store(n >= 1 ? n : 1); }

} // namespace bruhat

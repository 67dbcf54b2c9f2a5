#include "anyonwalk/parallel.hpp"

#include <cstdlib>
#include <string>

namespace anyonwalk {

unsigned default_thread_count() {
  if (const char* env = std::getenv("ANYONWALK_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace anyonwalk

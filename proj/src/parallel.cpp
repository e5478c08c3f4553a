#include "yao4/parallel.hpp"

#include <cstdlib>
#include <string>

namespace yao4 {

int configured_thread_count() {
  static const int cached = [] {
    int n = 0;
    if (const char* env = std::getenv("YAO4_THREADS")) {
      try {
        n = std::stoi(env);
      } catch (...) {
        n = 0;
      }
    }
    if (n <= 0) n = int(std::thread::hardware_concurrency());
    return n > 0 ? n : 1;
  }();
  return cached;
}

}  // namespace yao4

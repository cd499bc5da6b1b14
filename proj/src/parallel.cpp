#include "bpb/parallel.hpp"

#include <cstdlib>
#include <string>

namespace bpb {

std::size_t thread_count(std::size_t requested) {
  std::size_t n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BPB_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
    } catch (const std::exception&) {
    }
  }
  if (requested > 0) n = std::min(n, requested);
  return n;
}

}  // namespace bpb

#include "boolnet/config.hpp"

#include <atomic>
#include <string>

#include "boolnet/errors.hpp"

namespace boolnet {

namespace {
std::atomic<int> g_arity_cap{26};
}

int arity_cap() { return g_arity_cap.load(std::memory_order_relaxed); }

void set_arity_cap(int cap) {
  if (cap < 1 || cap > kMaxArity)
    throw parameter_error("arity cap must lie in 1.." + std::to_string(kMaxArity));
  g_arity_cap.store(cap, std::memory_order_relaxed);
}

} // namespace boolnet

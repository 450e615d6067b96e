#include "fftp/counters.hpp"

namespace fftp {

namespace detail {
OpCounters& counters() {
  thread_local OpCounters instance;
  return instance;
}
}  // namespace detail

OpCounters op_counters() { return detail::counters(); }

void reset_op_counters() { detail::counters() = OpCounters{}; }

}  // namespace fftp

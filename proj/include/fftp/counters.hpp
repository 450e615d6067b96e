#pragma once

#include <cstdint>

namespace fftp {

// Empirical cost accounting for the transform engines. Counters are kept per
// thread and only ever increase until reset.
struct OpCounters {
  std::uint64_t field_muls = 0;
  std::uint64_t recursions = 0;  // transforms delegated to a smaller prime
  std::uint64_t layers = 0;      // decomposition layers, short and radix-2
  std::uint64_t short_layers = 0;
  std::uint64_t short_transforms = 0;
  std::uint64_t max_depth = 0;

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

OpCounters op_counters();
void reset_op_counters();

namespace detail {
OpCounters& counters();
}  // namespace detail

}  // namespace fftp

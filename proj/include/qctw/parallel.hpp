#pragma once

// OpenMP trial loops. Each trial writes only its own slot, and the first failing
// trial (lowest index) is the one reported, so output does not depend on the
// schedule or thread count.

#include "qctw/report.hpp"

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace qctw {

int thread_count();

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < total; ++i) fn(static_cast<std::size_t>(i));
}

template <class Fn>
void serial_for(std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

/// fn(i) returns a description of the failure, or nullopt.
template <class Fn>
std::optional<std::string> first_failure(std::size_t count, Fn&& fn, bool parallel = true) {
  std::vector<std::optional<std::string>> found(count);
  auto body = [&](std::size_t i) {
    try {
      found[i] = fn(i);
    } catch (const std::exception& e) {
      found[i] = std::string("exception: ") + e.what();
    }
  };
  if (parallel)
    parallel_for(count, body);
  else
    serial_for(count, body);
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

/// Runs `count` trials into `report`; zero trials marks the check skipped.
template <class Fn>
void run_trials(CheckReport& report, std::size_t count, Fn&& fn) {
  report.trials += count;
  if (count == 0) {
    if (report.status == CheckStatus::pass) report.status = CheckStatus::skip;
    return;
  }
  if (auto f = first_failure(count, fn)) report.fail(*f);
}

}  // namespace qctw

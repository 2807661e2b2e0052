#ifndef TERRACINI_ERROR_HPP
#define TERRACINI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace terracini {

struct Error : std::runtime_error {
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Two scalars from different fields (or different primes) were combined.
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string &msg) : Error(msg) {}
};

// A rational exceeded the configured height cap.
struct HeightOverflow : Error {
  explicit HeightOverflow(const std::string &msg) : Error(msg) {}
};

// A retry budget was exhausted while looking for a good sample.
struct SampleError : Error {
  explicit SampleError(const std::string &msg) : Error(msg) {}
};

} // namespace terracini

#endif // TERRACINI_ERROR_HPP

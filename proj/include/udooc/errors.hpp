#pragma once

#include <stdexcept>
#include <string>

namespace udooc {

// Thrown when a bit sequence is not a valid codeword for the configured
// unique word (the separator would appear inside UW . c . UW).
class InvalidCodeword : public std::runtime_error {
public:
  explicit InvalidCodeword(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a framed stream is structurally broken: payload does not
// start/end with the unique word, counts disagree with the header, or the
// container bytes are malformed.
class FramingError : public std::runtime_error {
public:
  explicit FramingError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by bounds that require growth rate > 1 when the unique word is
// 01 or 10 (the only linear-growth cases).
class DegenerateGrowth : public std::domain_error {
public:
  explicit DegenerateGrowth(const std::string& what) : std::domain_error(what) {}
};

}  // namespace udooc

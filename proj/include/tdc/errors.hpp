#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

/// The requested invariant does not exist for this graph (isolated vertex or
/// empty graph for the TDC-number and total domination number).
class UndefinedInstance : public std::domain_error {
 public:
  explicit UndefinedInstance(const std::string& what) : std::domain_error(what) {}
};

/// Input exceeds a configured exact-computation cap.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace tdc

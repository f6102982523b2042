#ifndef ARS_ERRORS_HPP_
#define ARS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ars {

// Base class for all library errors.
class ArsError : public std::runtime_error {
 public:
  explicit ArsError(const std::string& what) : std::runtime_error(what) {}
};

// Element names passed to build_ars are not pairwise distinct.
class DuplicateNameError : public ArsError {
 public:
  explicit DuplicateNameError(const std::string& name)
      : ArsError("duplicate element name: " + name) {}
};

// A step refers to a name that is not in the element list.
class UnknownNameError : public ArsError {
 public:
  explicit UnknownNameError(const std::string& name)
      : ArsError("unknown element name: " + name) {}
};

class IndexOutOfRangeError : public ArsError {
 public:
  explicit IndexOutOfRangeError(const std::string& what) : ArsError(what) {}
};

class MalformedLassoError : public ArsError {
 public:
  explicit MalformedLassoError(const std::string& what) : ArsError(what) {}
};

// A caller-supplied hypothesis (SN, WCR, CR, ...) does not hold; the message
// names the offending element or pair.
class PreconditionFailedError : public ArsError {
 public:
  explicit PreconditionFailedError(const std::string& what) : ArsError(what) {}
};

// A recursion budget ran out.  Under the documented preconditions this is
// unreachable; it fires only on precondition abuse or under-fueled calls.
class FuelExhaustedError : public ArsError {
 public:
  explicit FuelExhaustedError(const std::string& what) : ArsError(what) {}
};

// An exhaustive sweep (predicate enumeration, condensation path search,
// brute-force oracle) was asked to run beyond its hard size cap.
class CapacityExceededError : public ArsError {
 public:
  explicit CapacityExceededError(const std::string& what) : ArsError(what) {}
};

// A de Bruijn shift would push a free index below zero.
class NegativeIndexError : public ArsError {
 public:
  explicit NegativeIndexError(const std::string& what) : ArsError(what) {}
};

class ParseError : public ArsError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ArsError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A free variable name with no surrounding binder and no context entry.
class UnboundNameError : public ArsError {
 public:
  explicit UnboundNameError(const std::string& name)
      : ArsError("unbound variable name: " + name) {}
};

}  // namespace ars

#endif  // ARS_ERRORS_HPP_

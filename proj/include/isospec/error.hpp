// isospec - element-order spectra of finite symplectic and orthogonal groups
//
// Exception types. Each maps to one CLI exit code (see cli.hpp).

#ifndef ISOSPEC_ERROR_HPP_
#define ISOSPEC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace isospec {

  // Caller passed arguments outside an operation's contract (bad list, bad
  // prime, malformed config).
  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Parameters that name no valid object (invalid group label, violated
  // hypothesis, non-vertex prime).
  class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  // Valid request that this toolkit refuses to approximate.
  class UnsupportedError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A resource cap was hit (closure size, iteration bound).
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace isospec

#endif  // ISOSPEC_ERROR_HPP_

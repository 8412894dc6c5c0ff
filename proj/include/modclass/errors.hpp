#pragma once

#include <stdexcept>
#include <string>

namespace modclass {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class AxiomViolation : public Error {
 public:
  using Error::Error;
};

// Raised whenever a configured size bound would be exceeded. The three
// subclasses share a CLI exit code.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class LatticeTooLarge : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class HomSpaceTooLarge : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class HullPostconditionFailure : public Error {
 public:
  using Error::Error;
};

class ChainViolation : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotCommutative : public Error {
 public:
  using Error::Error;
};

}  // namespace modclass

#pragma once

#include <stdexcept>
#include <string>

namespace edgeplace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Target site is not on the origin's branch of the tree.
class UnreachableSite : public Error {
 public:
  using Error::Error;
};

/// A commit would push a device or link past its limit. The ledger is left
/// untouched when this is thrown.
class CapacityViolation : public Error {
 public:
  using Error::Error;
};

class IneligibleDevice : public Error {
 public:
  using Error::Error;
};

class EmptyModel : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent scenario description.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

}  // namespace edgeplace

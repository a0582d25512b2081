#pragma once

#include <stdexcept>
#include <string>

namespace thilb {

// Base for all library errors. Subclasses mirror the failure conditions of
// the public operations so callers can catch them individually.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class RankDeficient : public Error {
 public:
  explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

class ZeroVector : public Error {
 public:
  explicit ZeroVector(const std::string& msg) : Error(msg) {}
};

class DegenerateGale : public Error {
 public:
  explicit DegenerateGale(const std::string& msg) : Error(msg) {}
};

class NotProper : public Error {
 public:
  explicit NotProper(const std::string& msg) : Error(msg) {}
};

class NotAChamber : public Error {
 public:
  explicit NotAChamber(const std::string& msg) : Error(msg) {}
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

class NotWeaklyGraded : public Error {
 public:
  explicit NotWeaklyGraded(const std::string& msg) : Error(msg) {}
};

class WeightOutsideSupport : public Error {
 public:
  explicit WeightOutsideSupport(const std::string& msg) : Error(msg) {}
};

class WitnessFailed : public Error {
 public:
  explicit WitnessFailed(const std::string& msg) : Error(msg) {}
};

class FlipCountViolation : public Error {
 public:
  explicit FlipCountViolation(const std::string& msg) : Error(msg) {}
};

class WallNotCoherent : public Error {
 public:
  explicit WallNotCoherent(const std::string& msg) : Error(msg) {}
};

class InvalidPair : public Error {
 public:
  explicit InvalidPair(const std::string& msg) : Error(msg) {}
};

class TooManyGraverElements : public Error {
 public:
  explicit TooManyGraverElements(const std::string& msg) : Error(msg) {}
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// Raised when a structural fact the algorithms rely on fails to hold at
// runtime (it indicates a bug, never bad user input).
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace thilb

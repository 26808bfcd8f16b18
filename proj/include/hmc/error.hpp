#pragma once

#include <stdexcept>
#include <string>

namespace hmc {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map "bad input" to a single exit path.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch: " + what) {}
};

class SingularMatrix : public Error {
  public:
    explicit SingularMatrix(const std::string& what = "matrix is not invertible over GF(2)")
        : Error("SingularMatrix: " + what) {}
};

class NotBijective : public Error {
  public:
    explicit NotBijective(const std::string& what) : Error("NotBijective: " + what) {}
};

class NotConnected : public Error {
  public:
    explicit NotConnected(const std::string& what) : Error("NotConnected: " + what) {}
};

class NonIntegerGenus : public Error {
  public:
    explicit NonIntegerGenus(const std::string& what) : Error("NonIntegerGenus: " + what) {}
};

class DuplicateHyperedge : public Error {
  public:
    explicit DuplicateHyperedge(const std::string& what) : Error("DuplicateHyperedge: " + what) {}
};

class OutOfRange : public Error {
  public:
    explicit OutOfRange(const std::string& what) : Error("OutOfRange: " + what) {}
};

class NotOrthogonal : public Error {
  public:
    explicit NotOrthogonal(const std::string& what) : Error("NotOrthogonal: " + what) {}
};

class TooLarge : public Error {
  public:
    explicit TooLarge(const std::string& what) : Error("TooLarge: " + what) {}
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

}  // namespace hmc

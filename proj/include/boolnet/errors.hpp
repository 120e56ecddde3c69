#ifndef BOOLNET_ERRORS_HPP
#define BOOLNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace boolnet {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid argument or violated precondition.
class parameter_error : public error {
public:
  explicit parameter_error(const std::string& msg) : error(msg) {}
};

/// A size or arity limit was exceeded.
class limit_error : public error {
public:
  explicit limit_error(const std::string& msg) : error(msg) {}
};

/// Malformed input text (JSON, DOT, row or block files).
class parse_error : public error {
public:
  explicit parse_error(const std::string& msg) : error(msg) {}
};

/// A construction's advertised postcondition failed verification.
class verify_error : public error {
public:
  explicit verify_error(const std::string& msg) : error(msg) {}
};

} // namespace boolnet

#endif

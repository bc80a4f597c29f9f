#pragma once

#include <stdexcept>
#include <string>

namespace gpforge {

class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Unknown operation, arity mismatch, malformed signature.
class SignatureError : public Error {
public:
	using Error::Error;
};

/// A configured size cap (basis, instances, model dimension) was exceeded.
class ResourceError : public Error {
public:
	using Error::Error;
};

/// Model construction or model/variety mismatch.
class ModelError : public Error {
public:
	using Error::Error;
};

class ParseError : public Error {
public:
	ParseError(const std::string& msg, int line = 0, int column = 0)
	    : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + msg : msg),
	      line_(line), column_(column)
	{
	}
	int line() const { return line_; }
	int column() const { return column_; }

private:
	int line_;
	int column_;
};

} // namespace gpforge

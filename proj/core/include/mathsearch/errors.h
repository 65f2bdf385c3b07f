#ifndef MATHSEARCH_ERRORS_H_
#define MATHSEARCH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mathsearch {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors caused by bad user input (queries, expressions, markup). The CLI maps
// these to exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

// Errors caused by the filesystem or by persisted files. The CLI maps these
// to exit code 2.
class StorageError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : InputError(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Malformed XML / XHTML.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class UnsupportedElement : public InputError {
 public:
  explicit UnsupportedElement(const std::string& name)
      : InputError("unsupported MathML element <" + name + ">"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class MalformedLayout : public InputError {
 public:
  using InputError::InputError;
};

class ArityError : public InputError {
 public:
  using InputError::InputError;
};

// An equation inside a document could not be turned into an expression.
class MathParseError : public InputError {
 public:
  using InputError::InputError;
};

class MissingField : public InputError {
 public:
  MissingField(const std::string& predicate, const std::string& doc_uri)
      : InputError("missing " + predicate + " for " + doc_uri),
        predicate_(predicate),
        doc_uri_(doc_uri) {}

  const std::string& predicate() const { return predicate_; }
  const std::string& doc_uri() const { return doc_uri_; }

 private:
  std::string predicate_;
  std::string doc_uri_;
};

class UnknownConcept : public InputError {
 public:
  explicit UnknownConcept(const std::string& name)
      : InputError("unknown concept '" + name + "'") {}
};

class EmptyQuery : public InputError {
 public:
  EmptyQuery() : InputError("empty query") {}
};

class BadPairSyntax : public InputError {
 public:
  using InputError::InputError;
};

class UnboundSelectVar : public InputError {
 public:
  explicit UnboundSelectVar(const std::string& var)
      : InputError("select variable " + var + " does not appear in any pattern") {}
};

class IoError : public StorageError {
 public:
  using StorageError::StorageError;
};

class FormatError : public StorageError {
 public:
  using StorageError::StorageError;
};

}  // namespace mathsearch

#endif  // MATHSEARCH_ERRORS_H_

#ifndef FEATURECLOUDS_ERROR_H_
#define FEATURECLOUDS_ERROR_H_

#include <filesystem>
#include <stdexcept>
#include <string>

namespace featureclouds {

// Malformed or unreadable input data (block files, truth files, word lists).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A line-oriented input could not be parsed. `line()` is 1-based, 0 if unknown.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DataError(line == 0 ? what
                            : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyBlockError : public DataError {
 public:
  using DataError::DataError;
};

// Failure while reading or writing a file; carries the offending path.
class IoError : public DataError {
 public:
  IoError(const std::filesystem::path& path, const std::string& what)
      : DataError(path.string() + ": " + what), path_(path) {}

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// A stage of the naming pipeline could not produce a result.
class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyTokensError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

class EmptyTableError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

class FilterError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

class LayoutOverflowError : public PipelineError {
 public:
  using PipelineError::PipelineError;
};

}  // namespace featureclouds

#endif  // FEATURECLOUDS_ERROR_H_

#pragma once

#include <stdexcept>
#include <string>

namespace unwrapforge {

// Process exit codes used by the CLI.
enum class ExitCode : int {
  Ok = 0,
  Config = 2,
  Data = 3,
  Numeric = 4,
  Stage = 5,
};

struct Error : std::runtime_error {
  ExitCode code;
  Error(ExitCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(ExitCode::Config, msg) {}
};

struct DataError : Error {
  explicit DataError(const std::string& msg) : Error(ExitCode::Data, msg) {}
};

struct NumericError : Error {
  explicit NumericError(const std::string& msg) : Error(ExitCode::Numeric, msg) {}
};

struct StageError : Error {
  explicit StageError(const std::string& msg) : Error(ExitCode::Stage, msg) {}
};

// Grid file parsing failures, one code per failure mode.
enum class GridIoCode {
  BadMagic,
  VersionMismatch,
  Truncated,
  DimensionOverflow,
  SizeMismatch,
  BadKind,
};

struct GridIoError : DataError {
  GridIoCode io_code;
  GridIoError(GridIoCode c, const std::string& msg) : DataError(msg), io_code(c) {}
};

}  // namespace unwrapforge

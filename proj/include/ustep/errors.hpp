#pragma once

#include <stdexcept>
#include <string>

namespace ustep {

// Invalid miner or CLI configuration (bad sigma/phi, unparsable mask regex).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A snapshot stream that is truncated, corrupt, or of an unknown version.
class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A labeled dataset whose content does not follow the expected CSV layout.
class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file that cannot be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ustep

#pragma once

#include <stdexcept>
#include <string>

namespace sclab {

// Error taxonomy. config errors map to CLI exit code 2, numeric errors to 3.
enum class errc {
  bad_config,
  domain,
  ordering,
  pole,
  singularity,
  clearance,
  step_failure,
  non_convergence,
  calibration,
  degenerate_region,
  io
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& module, const std::string& what)
      : std::runtime_error(module + ": " + what), kind_(kind), module_(module) {}

  errc kind() const { return kind_; }
  const std::string& module() const { return module_; }

  bool is_config() const { return kind_ == errc::bad_config || kind_ == errc::domain || kind_ == errc::ordering; }

private:
  errc kind_;
  std::string module_;
};

[[noreturn]] inline void fail(errc kind, const std::string& module, const std::string& what) {
  throw error(kind, module, what);
}

}  // namespace sclab

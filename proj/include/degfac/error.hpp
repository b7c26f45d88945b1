#ifndef DEGFAC_ERROR_HPP
#define DEGFAC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace degfac {

/// Error categories surfaced through the public API.
enum class errc {
  arity_mismatch,
  zero_input,
  precondition,
  parse,
  resource,
  internal,
};

class df_error : public std::runtime_error {
 public:
  df_error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) throw df_error(code, msg);
}

}  // namespace degfac

#endif

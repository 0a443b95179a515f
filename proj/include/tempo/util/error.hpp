#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace tempo {

// Builds an error message from stream-able parts and throws std::runtime_error.
template <class... Parts>
[[noreturn]] void fail(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  throw std::runtime_error(os.str());
}

template <class... Parts>
void require(bool cond, const Parts&... parts) {
  if (!cond) fail(parts...);
}

template <class... Parts>
std::string strcat_msg(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

}  // namespace tempo

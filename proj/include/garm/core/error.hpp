#pragma once

#include <stdexcept>
#include <string>

namespace garm {

// All contract violations surface as garm::Error with a short lowercase
// message ("out of domain", "empty point set", ...).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw Error(msg);
}

}  // namespace garm

#include "repgeo/errors.hpp"

namespace repgeo {

const char* Error::what() const noexcept {
  if (what_.empty()) {
    if (span_) {
      what_ = std::to_string(span_->line) + ":" + std::to_string(span_->column) + ": " + message_;
    } else {
      what_ = message_;
    }
  }
  return what_.c_str();
}

NotAGroup::NotAGroup(Reason reason, std::array<std::size_t, 3> witness, std::string detail)
    : Error("not a group (" + std::string(to_string(reason)) + "): " + detail),
      reason_(reason),
      witness_(witness) {}

const char* to_string(NotAGroup::Reason reason) {
  switch (reason) {
    case NotAGroup::Reason::identity:
      return "identity";
    case NotAGroup::Reason::latin_square:
      return "latin-square";
    case NotAGroup::Reason::associativity:
      return "associativity";
    case NotAGroup::Reason::inverse:
      return "inverse";
  }
  return "unknown";
}

}  // namespace repgeo

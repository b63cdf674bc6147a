#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace nadic {

// A value of T or +infinity.
template <class T>
class Extended {
 public:
  Extended(T value) : value_(std::move(value)) {}  // NOLINT(implicit)
  static Extended infinite() { return Extended(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  const T& value() const {
    if (!value_) throw std::logic_error("value() on an infinite quantity");
    return *value_;
  }

  std::string to_string() const {
    if (!value_) return "inf";
    if constexpr (requires(const T& t) { t.to_string(); }) {
      return value_->to_string();
    } else {
      return std::to_string(*value_);
    }
  }

  friend bool operator==(const Extended& a, const Extended& b) { return a.value_ == b.value_; }
  friend std::weak_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::weak_ordering::equivalent;
      return a.is_infinite() ? std::weak_ordering::greater : std::weak_ordering::less;
    }
    if (*a.value_ < *b.value_) return std::weak_ordering::less;
    if (*b.value_ < *a.value_) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

 private:
  Extended() = default;
  std::optional<T> value_;
};

}  // namespace nadic

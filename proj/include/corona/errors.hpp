#ifndef CORONA_ERRORS_HPP
#define CORONA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace corona {

struct invalid_argument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A request whose size exceeds a configured budget.
class resource_limit_error : public std::runtime_error {
 public:
  resource_limit_error(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + " (required " + std::to_string(required) + ", budget " +
                           std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct connectivity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not. Firing means a bug, never bad input.
struct inconsistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace corona

#endif  // CORONA_ERRORS_HPP

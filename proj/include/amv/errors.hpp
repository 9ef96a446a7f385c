#ifndef AMV_ERRORS_HPP
#define AMV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amv {

/// A precondition on an argument was violated (odd n where even is needed,
/// a non-prime modulus, a zero divisor series, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computed value contradicts a theorem the library certifies. Carries the
/// theorem tag, the query that produced it and the offending value so the
/// failure can be reported verbatim.
class TheoremViolation : public std::runtime_error {
public:
  TheoremViolation(std::string theorem, std::string query, std::string value)
      : std::runtime_error(theorem + " violated at " + query + ": " + value),
        theorem_(std::move(theorem)), query_(std::move(query)), value_(std::move(value)) {}

  const std::string& theorem() const noexcept { return theorem_; }
  const std::string& query() const noexcept { return query_; }
  const std::string& value() const noexcept { return value_; }

private:
  std::string theorem_;
  std::string query_;
  std::string value_;
};

} // namespace amv

#endif // AMV_ERRORS_HPP

#ifndef NOVIKOV_ERRORS_HPP
#define NOVIKOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace novikov {

// Every domain failure carries a stable machine-readable kind so the CLI can
// serialize it without string matching on messages.
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

inline Error malformed_input(const std::string& msg) { return Error("malformed-input", msg); }
inline Error empty_input(const std::string& msg) { return Error("empty-input", msg); }
inline Error shape_mismatch(const std::string& msg) { return Error("shape-mismatch", msg); }
inline Error not_a_tableau(const std::string& msg) { return Error("not-a-tableau", msg); }
inline Error not_found(const std::string& msg) { return Error("not-found", msg); }
inline Error field_obstruction(const std::string& msg) { return Error("field-obstruction", msg); }
inline Error hypothesis_violation(const std::string& msg) { return Error("hypothesis-violation", msg); }
inline Error internal_error(const std::string& msg) { return Error("internal", msg); }

class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : Error("parse", message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

}  // namespace novikov

#endif

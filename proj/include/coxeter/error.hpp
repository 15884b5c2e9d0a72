#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace coxeter {

// Failure classes, mapped by the CLI onto exit codes.
enum class fail {
  parse,    // malformed input text
  domain,   // a precondition or structural invariant was violated
  numeric,  // a sign test came out ambiguous at the working tolerance
  bound     // a semi-decision ran past its configured bound
};

class error : public std::runtime_error {
 public:
  error(fail category, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what),
        category_(category),
        code_(std::move(code)) {}

  fail category() const { return category_; }
  const std::string& code() const { return code_; }

 private:
  fail category_;
  std::string code_;
};

[[noreturn]] inline void raise(fail category, std::string code,
                               const std::string& what) {
  throw error(category, std::move(code), what);
}

inline void require(bool ok, fail category, const char* code,
                    const std::string& what) {
  if (!ok) raise(category, code, what);
}

}  // namespace coxeter
